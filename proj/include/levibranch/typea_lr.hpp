#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "levibranch/branching.hpp"
#include "levibranch/rootsys.hpp"
#include "levibranch/weight.hpp"

namespace lvb {

/// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless `parts` is weakly decreasing and nonnegative.
  Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Every part doubled.
  Partition doubled() const;
  bool contains(const Partition& o) const;

  /// The partition as a gl_n weight padded with zeros.
  Weight to_weight(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of n with at most max_parts parts (0 = no bound), reverse
/// lexicographic: (n) first.
std::vector<Partition> partitions_of(int n, std::size_t max_parts = 0);
/// Partitions kappa with kappa inside lambda and |kappa| = n.
std::vector<Partition> partitions_inside(const Partition& lambda, int n);

/// c^lambda_{mu,nu}: LR skew tableaux of shape lambda/mu and content nu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
/// s_mu * s_nu = sum_lambda c^lambda_{mu,nu} s_lambda.
std::map<Partition, std::int64_t> lr_product(const Partition& mu, const Partition& nu);
/// Multiplicity of s_lambda in s_{mu_1} ... s_{mu_r}.
std::int64_t multi_lr(const Partition& lambda, std::span<const Partition> factors);

/// Semistandard tableaux of shape lambda and content `content` (any composition).
std::int64_t kostka_tableaux(const Partition& lambda, std::span<const int> content);

/// Kostka matrix K[lambda][mu] on the partitions of n (order of partitions_of)
/// and its exact inverse. K is upper unitriangular in that order.
struct KostkaMatrix {
  std::vector<Partition> index;
  std::vector<std::vector<std::int64_t>> K, Kinv;
};
const KostkaMatrix& kostka_matrix(int n);
/// Coefficient of h_lambda in s_mu. Throws ValidationError if |lambda| != |mu|.
std::int64_t inverse_kostka(const Partition& lambda, const Partition& mu);

/// Positive coordinates and negated negative coordinates of a gl_n weight.
struct SignedSplit {
  Partition mu_plus, mu_minus;
  friend bool operator==(const SignedSplit&, const SignedSplit&) = default;
};
/// Throws ValidationError if mu is not weakly decreasing or not integral.
SignedSplit split_signed(const Weight& mu);
/// (mu_plus padded with zeros, then the negated reverse of mu_minus).
Weight join_signed(const SignedSplit& s, std::size_t n);

/// m^{lambda + a delta}_{mu + a delta} == m^lambda_mu for a gl_n Levi.
bool delta_shift_check(const BranchingContext& ctx, const Weight& lambda, const Weight& mu, int a);

/// The blocks mu^(k) of mu along the Levi components, as partitions.
/// Throws ValidationError if some coordinate of mu is negative.
std::vector<Partition> levi_blocks(const LeviDatum& levi, const Weight& mu);

/// m^lambda_mu == multi_lr(lambda; mu^(1), ..., mu^(r)) for every lambda given.
/// Requires a gl_n Levi and mu with positive coordinates. A lambda with negative
/// parts is compared after shifting lambda and every block by the same multiple of (1, ..., 1).
bool schur_factorization_check(const BranchingContext& ctx, const Weight& mu, std::span<const Weight> lambdas);

/// Littlewood's branching sum for so_{2n+1}, sp_{2n}, so_{2n} restricted to gl_n:
/// sum over gamma, delta of c^gamma_{mu+,mu-} c^lambda_{gamma,delta'} with delta' =
/// delta (B), 2 delta (C), (2 delta)* (D); gamma and delta have at most n parts.
std::int64_t polarisation_branch(Family family, int n, const Weight& mu, const Partition& lambda);

}  // namespace lvb
