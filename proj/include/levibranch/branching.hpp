#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "levibranch/rootsys.hpp"
#include "levibranch/weightpoly.hpp"
#include "levibranch/weylgrp.hpp"

namespace lvb {

struct BranchingOptions {
  std::uint64_t group_guard = kDefaultGroupGuard;
  std::uint64_t character_budget = kDefaultCharacterBudget;
  unsigned threads = 1;
};

/// Per-Levi cache: W, the Levi Weyl group, U, the diagram automorphisms and the
/// partition function P̄. Group data is computed on first use; everything is
/// safe to share between threads.
class BranchingContext {
 public:
  explicit BranchingContext(LeviDatum levi, BranchingOptions opts = {});

  const LeviDatum& levi() const { return levi_; }
  const RootDatum& datum() const { return levi_.parent(); }
  const BranchingOptions& options() const { return opts_; }

  const std::vector<WeylElement>& group() const;
  const std::vector<WeylElement>& levi_group() const;
  const Transversal& transversal() const;
  const std::vector<WeylElement>& automorphisms() const;
  PartitionTable& pbar() const { return *pbar_; }
  const std::shared_ptr<PartitionTable>& pbar_ptr() const { return pbar_; }

 private:
  LeviDatum levi_;
  BranchingOptions opts_;
  std::shared_ptr<PartitionTable> pbar_;
  mutable std::once_flag group_once_, levi_once_, u_once_, auto_once_;
  mutable std::vector<WeylElement> group_, levi_group_, autos_;
  mutable Transversal u_;
};

/// m_mu^lambda = sum_w eps(w) P̄(w(lambda+rho) - mu - rho).
std::int64_t branch_multiplicity(const BranchingContext& ctx, const Weight& lambda, const Weight& mu);

/// Restriction of V(lambda) to the Levi: mu -> m_mu^lambda (nonzero entries only),
/// by stripping Levi characters off the full character.
std::map<Weight, std::int64_t> branch_by_restriction(const BranchingContext& ctx, const Weight& lambda);

/// m_mu^lambda for every lambda in a bounded box.
struct BranchingRow {
  Weight mu;
  std::map<Weight, std::int64_t> entries;
};

/// Dominant lambda = mu + sum n_i alpha_i with 0 <= n_i <= k * (coordinate i of
/// the highest root), i.e. mu <= lambda <= mu + k*theta.
std::vector<Weight> lambda_box(const RootDatum& datum, const Weight& mu, int k);
BranchingRow branching_row(const BranchingContext& ctx, const Weight& mu, int k);

/// M_mu, stored as its expansion M_mu = sum_lambda a_lambda m_lambda over
/// dominant lambda (m as in symmetrize, i.e. with stabilizer weights).
struct MFunction {
  Weight mu;
  std::map<Weight, std::int64_t> a;

  /// Coefficient of e^x in M_mu.
  std::int64_t coefficient(const RootDatum& datum, const Weight& x) const;
  WeightPolynomial expand(const RootDatum& datum) const;
  friend bool operator==(const MFunction& x, const MFunction& y) { return x.a == y.a; }
};

/// Builds M_mu from the Levi Weyl group sum and checks it against the
/// transversal form eps(w̄0) sum_u u(ā_{mu+rhō} ā_rhō). Throws std::logic_error if
/// the two disagree. `check` = false skips the second construction.
MFunction build_M(const BranchingContext& ctx, const Weight& mu, bool check = true);

/// a_{lambda,mu}: sum of eps(w̄) over w̄ with mu + rhō - w̄(rhō) in W lambda.
std::int64_t a_coefficient(const BranchingContext& ctx, const Weight& lambda, const Weight& mu);

struct LeadingTerm {
  Weight Lambda;            // dominant representative of mu + 2 rhō
  std::int64_t m_coefficient;  // coefficient of m_Lambda
  std::int64_t e_coefficient;  // coefficient of e^Lambda
  bool others_below;        // every other dominant term is strictly below Lambda
};
LeadingTerm leading_term(const BranchingContext& ctx, const MFunction& M);
LeadingTerm leading_term(const BranchingContext& ctx, const Weight& mu);

/// E_mu = { mu + rhō - w̄(rhō) }.
std::vector<Weight> e_set(const BranchingContext& ctx, const Weight& mu);
/// Some w in W maps E_mu into the closed dominant chamber.
bool far_from_walls(const BranchingContext& ctx, const Weight& mu);

/// Validation helpers shared by the commands.
void require_g_dominant(const RootDatum& datum, const Weight& lambda);
void require_levi_dominant(const LeviDatum& levi, const Weight& mu);

}  // namespace lvb
