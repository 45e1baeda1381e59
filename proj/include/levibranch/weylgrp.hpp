#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levibranch/rootsys.hpp"
#include "levibranch/weight.hpp"

namespace lvb {

/// Default cap on |W| for anything that enumerates the whole group.
inline constexpr std::uint64_t kDefaultGroupGuard = 2'000'000;

/// Signed permutation w: e_i -> signs[i] * e_{perm[i]}.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(std::size_t n);
  /// `perm` is 0-based; throws ValidationError if it is not a signed permutation.
  WeylElement(std::span<const int> perm, std::span<const int> signs);
  /// The reflection s_alpha for a root alpha of a classical system.
  static WeylElement reflection(const Weight& alpha);

  std::size_t dim() const { return n_; }
  int perm(std::size_t i) const { return perm_[i]; }
  int sign_at(std::size_t i) const { return signs_[i]; }

  Weight act(const Weight& beta) const;
  /// w . beta = w(beta + rho) - rho.
  Weight dot_act(const Weight& beta, const Weight& rho) const { return act(beta + rho) - rho; }

  /// Determinant: sign(perm) times the product of the signs.
  int sign() const;
  bool is_identity() const;
  /// Product of the signs; +1 is required for type D.
  int sign_product() const;
  bool belongs_to(const RootDatum& datum) const;

  WeylElement operator*(const WeylElement& o) const;  // (this * o)(x) = this(o(x))
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend std::strong_ordering operator<=>(const WeylElement&, const WeylElement&) = default;

  std::string to_string() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> perm_{};
  std::array<std::int8_t, kMaxRank> signs_{};
};

/// Throws GroupSizeError when |W| exceeds `guard`.
void check_group_guard(const RootDatum& datum, std::uint64_t guard);

/// Every element of W exactly once, in a fixed order (permutations in
/// lexicographic order, sign patterns inside).
std::vector<WeylElement> enumerate_group(const RootDatum& datum, std::uint64_t guard = kDefaultGroupGuard);
void for_each_element(const RootDatum& datum, const std::function<void(const WeylElement&)>& fn,
                      std::uint64_t guard = kDefaultGroupGuard);

/// Levi Weyl group, generated by the reflections in S̄; canonically sorted.
std::vector<WeylElement> levi_weyl_group(const LeviDatum& levi, std::uint64_t guard = kDefaultGroupGuard);

struct DominantRep {
  WeylElement w;
  Weight lambda;
};
/// lambda = w(beta) dominant, computed by sorting.
DominantRep dominant_representative(const RootDatum& datum, const Weight& beta);
Weight dominant_weight(const RootDatum& datum, const Weight& beta);

/// |Stab_W(lambda)| for a dominant lambda (closed form per family).
std::uint64_t stabilizer_order(const RootDatum& datum, const Weight& dominant);
std::uint64_t orbit_size(const RootDatum& datum, const Weight& beta);

/// Minimal coset representatives U = {u : u(R̄+) in R+}.
struct Transversal {
  std::vector<WeylElement> elements;
};

/// u sends every root in S̄ to a positive root.
bool in_transversal(const WeylElement& u, const LeviDatum& levi);
Transversal transversal_U(const LeviDatum& levi, std::uint64_t guard = kDefaultGroupGuard);

struct CosetDecomposition {
  WeylElement u;
  WeylElement wbar;
};
/// w = u * wbar with u in U and wbar in the Levi Weyl group.
CosetDecomposition coset_decompose(const WeylElement& w, const LeviDatum& levi);

/// {u in W : u(R̄+) = R̄+}; each element is checked to fix rho_bar.
std::vector<WeylElement> diagram_automorphisms(const LeviDatum& levi, std::uint64_t guard = kDefaultGroupGuard);
std::vector<WeylElement> diagram_automorphisms(const LeviDatum& levi, const Transversal& transversal);

struct Straightened {
  int sign;
  Weight lambda;
};
/// s_beta = sign * s_lambda with lambda dominant; nullopt when beta + rho is
/// fixed by a reflection.
std::optional<Straightened> straighten(const RootDatum& datum, const Weight& beta);

/// Some w with w(x) dominant for every x in `points`, if a common closed chamber exists.
std::optional<WeylElement> common_chamber(const RootDatum& datum, std::span<const Weight> points);

/// Number of positive roots sent to negative roots.
int length(const WeylElement& w, const RootDatum& datum);

}  // namespace lvb
