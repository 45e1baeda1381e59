#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "levibranch/rootsys.hpp"
#include "levibranch/weight.hpp"
#include "levibranch/weylgrp.hpp"

namespace lvb {

/// Finite formal sum of e^beta with integer coefficients. Zero coefficients
/// are never stored; iteration follows the canonical weight order.
class WeightPolynomial {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  WeightPolynomial() = default;
  static WeightPolynomial monomial(const Weight& w, std::int64_t c = 1);

  void add(const Weight& w, std::int64_t c);
  std::int64_t coefficient(const Weight& w) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  WeightPolynomial& operator+=(const WeightPolynomial& o);
  WeightPolynomial& operator-=(const WeightPolynomial& o);
  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
  friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
  WeightPolynomial operator*(const WeightPolynomial& o) const;
  WeightPolynomial scaled(std::int64_t k) const;
  /// Apply w to every exponent.
  WeightPolynomial act(const WeylElement& w) const;

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

  /// [{"w": [coords], "c": n}, ...] in canonical order.
  nlohmann::json to_json() const;
  static WeightPolynomial from_json(const nlohmann::json& j);

 private:
  Terms terms_;
};

/// A weight as a JSON array of true coordinates (halves as x.5).
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

/// Kostant partition function for a fixed multiset of positive roots.
///
/// Evaluation is a memoized recursion over the roots in a fixed order,
/// carried out in simple-root coordinates of the parent datum. Lookups take a
/// shared lock; filling takes an exclusive one.
class PartitionTable {
 public:
  /// P for all of R+.
  static std::shared_ptr<PartitionTable> for_datum(const RootDatum& datum);
  /// P̄ for R+ minus R̄+.
  static std::shared_ptr<PartitionTable> for_levi(const LeviDatum& levi);

  PartitionTable(const RootDatum& datum, std::vector<Weight> roots);

  std::span<const Weight> roots() const { return roots_; }
  /// Number of ways to write beta as an N-combination of roots().
  std::uint64_t count(const Weight& beta) const;
  /// Number of cached top-level values.
  std::size_t cached() const;

  /// Sorted flat list "d1 d2 ... value" (doubled coordinates), with a header line.
  void save(const std::filesystem::path& path) const;
  /// Merge a saved table; returns false if the file is absent. Throws IoError on a
  /// malformed file or one written for a different root list.
  bool load(const std::filesystem::path& path);

 private:
  using Coords = std::array<std::int16_t, kMaxRank>;
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint32_t, Coords>& k) const noexcept;
  };

  std::uint64_t eval(std::uint32_t k, const Coords& c) const;
  std::string header() const;

  std::size_t rank_ = 0;
  std::vector<Weight> roots_;
  std::vector<Coords> root_coords_;
  // suffix_support_[k]: bitmask of simple coordinates reachable by roots k..end
  std::vector<std::uint32_t> suffix_support_;
  RootCone cone_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Weight, std::uint64_t, WeightHash> top_;
  mutable std::unordered_map<std::pair<std::uint32_t, Coords>, std::uint64_t, KeyHash> memo_;
};

/// Default cap on the dimension of a character built by Freudenthal's formula.
inline constexpr std::uint64_t kDefaultCharacterBudget = 4'000'000;

/// Weyl dimension formula for the module of highest weight lambda.
std::uint64_t weyl_dimension(const RootSubsystem& sys, const Weight& lambda);

/// Character of V(lambda) by Freudenthal's recursion. Works for any reductive
/// subsystem (g itself or a Levi). Throws BudgetError when the dimension
/// exceeds `budget`.
WeightPolynomial weyl_character(const RootSubsystem& sys, const Weight& lambda,
                                std::uint64_t budget = kDefaultCharacterBudget);
WeightPolynomial weyl_character(const RootDatum& datum, const Weight& lambda,
                                std::uint64_t budget = kDefaultCharacterBudget);

/// dim V(lambda)_beta by Kostant's formula: sum_w eps(w) P(w(lambda+rho) - (beta+rho)).
std::int64_t kostka_multiplicity(const RootDatum& datum, const PartitionTable& full, const Weight& lambda,
                                 const Weight& beta, std::span<const WeylElement> group);
std::int64_t kostka_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& beta);

/// m_gamma = sum over all w in W of e^{w(gamma)}.
WeightPolynomial symmetrize(const RootDatum& datum, const Weight& gamma,
                            std::uint64_t guard = kDefaultGroupGuard);

/// ā_gamma = sum over the Levi Weyl group of eps(w̄) e^{w̄(gamma)}.
WeightPolynomial alternating_sum(std::span<const WeylElement> levi_group, const Weight& gamma);
WeightPolynomial alternating_sum(const LeviDatum& levi, const Weight& gamma);

/// Product over R̄+ of (1 - e^alpha); checked against the alternating form.
WeightPolynomial nabla_bar(const LeviDatum& levi);

}  // namespace lvb
