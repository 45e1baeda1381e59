#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levibranch/weight.hpp"

namespace lvb {

enum class Family { GL, B, C, D };

std::string family_name(Family f);
Family parse_family(std::string_view s);

using Rational = boost::rational<std::int64_t>;

/// Exact membership test for the N-span of a linearly independent set.
///
/// Coordinates are found through a precomputed rational left inverse on a set
/// of pivot rows and then verified against every ambient row.
class RootCone {
 public:
  RootCone() = default;
  RootCone(std::vector<Weight> basis, std::size_t dim);

  /// Coordinates of v in the basis; nullopt if v is outside the integer span.
  std::optional<std::vector<std::int64_t>> coordinates(const Weight& v) const;
  /// v is a nonnegative integer combination of the basis.
  bool contains(const Weight& v) const;
  /// Sum of coordinates; nullopt outside the integer span.
  std::optional<std::int64_t> height(const Weight& v) const;

  std::span<const Weight> basis() const { return basis_; }

 private:
  std::vector<Weight> basis_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> pivots_;
  // inverse_[i][j]: coefficient of basis element i from pivot row j.
  std::vector<std::vector<Rational>> inverse_;
};

/// Simple roots, positive roots and rho of a reductive root subsystem living in
/// the ambient space. Used for both g and a Levi subalgebra.
class RootSubsystem {
 public:
  RootSubsystem() = default;
  RootSubsystem(std::vector<Weight> simple, std::vector<Weight> positive, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::span<const Weight> simple_roots() const { return simple_; }
  std::span<const Weight> positive_roots() const { return positive_; }
  const Weight& rho() const { return rho_; }
  const RootCone& cone() const { return cone_; }

  bool is_dominant(const Weight& x) const;
  /// Dominant element of the Weyl orbit of x, by repeated simple reflections.
  /// `parity` (if given) receives the number of reflections used mod 2.
  Weight dominant(const Weight& x, int* parity = nullptr) const;
  /// Full Weyl orbit of x, canonically sorted.
  std::vector<Weight> orbit(const Weight& x) const;

 private:
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::size_t dim_ = 0;
  Weight rho_;
  RootCone cone_;
};

/// A classical root system in ambient epsilon coordinates.
///
/// GL realizes gl_n on Z^n (simple roots e_i - e_{i+1}); B, C, D use the
/// usual conventions with last simple root e_n, 2e_n, e_{n-1}+e_n.
class RootDatum {
 public:
  RootDatum(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t dim() const { return static_cast<std::size_t>(rank_); }
  std::string name() const;

  std::span<const Weight> simple_roots() const { return sys_.simple_roots(); }
  const Weight& simple_root(int index1) const;  // 1-based
  std::span<const Weight> positive_roots() const { return sys_.positive_roots(); }
  const Weight& rho() const { return sys_.rho(); }
  const RootCone& cone() const { return sys_.cone(); }
  const RootSubsystem& subsystem() const { return sys_; }
  const Weight& highest_root() const { return highest_; }
  std::uint64_t weyl_order() const;

  bool is_root(const Weight& v) const;
  bool is_positive_root(const Weight& v) const;
  /// v lies in the weight lattice P of this family.
  bool in_lattice(const Weight& v) const;
  void require_lattice(const Weight& v) const;

  /// Full list of roots, positive first.
  std::vector<Weight> roots() const;

 private:
  Family family_;
  int rank_;
  RootSubsystem sys_;
  Weight highest_;
};

struct LeviComponent {
  char type;                   // 'A', 'B', 'C', 'D'
  int rank;                    // number of simple roots
  std::vector<int> coords;     // 0-based ambient coordinates
  std::vector<int> simple;     // 1-based simple-root indices
  std::string name() const;    // "gl3", "sp6", "so5", "so8"
};

/// Levi subalgebra attached to a subset of the simple roots.
class LeviDatum {
 public:
  /// `sbar` lists the retained simple roots, 1-based.
  LeviDatum(RootDatum parent, std::vector<int> sbar);

  const RootDatum& parent() const { return parent_; }
  std::span<const int> sbar() const { return sbar_; }
  std::span<const Weight> simple_roots() const { return sys_.simple_roots(); }
  std::span<const Weight> positive_roots() const { return sys_.positive_roots(); }
  const Weight& rho_bar() const { return sys_.rho(); }
  const RootSubsystem& subsystem() const { return sys_; }
  const RootCone& cone() const { return sys_.cone(); }
  std::span<const LeviComponent> components() const { return components_; }
  /// "gl3+sp6".
  std::string description() const;
  /// Sign of the longest element of the Levi Weyl group, (-1)^{|R̄+|}.
  int longest_sign() const { return positive_roots().size() % 2 == 0 ? 1 : -1; }

  bool is_dominant(const Weight& x) const { return sys_.is_dominant(x); }
  bool contains_root(const Weight& v) const;

 private:
  RootDatum parent_;
  std::vector<int> sbar_;
  RootSubsystem sys_;
  std::vector<LeviComponent> components_;
};

/// Exact (beta, alpha).
Rational pairing(const Weight& beta, const Weight& alpha);
/// 2(beta, alpha)/(alpha, alpha); throws if alpha is zero or the value is not integral.
std::int64_t coroot_pairing(const Weight& beta, const Weight& alpha);

bool is_dominant(const Weight& beta, const RootDatum& datum);
bool is_dominant(const Weight& beta, const LeviDatum& levi);

/// gamma <= beta: beta - gamma is an N-combination of the cone basis.
bool dominance_leq(const Weight& gamma, const Weight& beta, const RootCone& cone);

/// Cone membership for an arbitrary finite root set, by memoized depth-first
/// search bounded by the height functional `xi` (which must pair strictly
/// positively with every root in `roots`).
bool dominance_leq_search(const Weight& gamma, const Weight& beta, std::span<const Weight> roots,
                          const Weight& xi);

}  // namespace lvb
