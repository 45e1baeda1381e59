#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lvb {

/// Largest ambient dimension supported (gl_8 is needed for size-8 Kostka tables).
inline constexpr std::size_t kMaxRank = 8;

/// Exact vector in the ambient epsilon basis.
///
/// Coordinates are stored doubled so that half-integral (spin) weights stay
/// integral; `doubled(i) == 2 * x_i`. Ordering is lexicographic on the doubled
/// coordinates and is the canonical order used for every deterministic output.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim);

  /// Build from true integer coordinates.
  Weight(std::initializer_list<int> coords);
  static Weight from_integers(std::span<const int> coords);
  static Weight from_doubled(std::span<const int> doubled);
  static Weight from_doubled(std::initializer_list<int> doubled);
  /// Unit vector epsilon_i (0-based).
  static Weight unit(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return n_; }
  std::int32_t doubled(std::size_t i) const noexcept { return c_[i]; }
  void set_doubled(std::size_t i, std::int32_t v) noexcept { c_[i] = v; }

  bool is_zero() const noexcept;
  /// All true coordinates are integers.
  bool is_integral() const noexcept;
  /// All true coordinates are integers, or all are half-odd-integers.
  bool has_uniform_parity() const noexcept;

  /// True coordinate i; throws if it is not an integer.
  int integer_coord(std::size_t i) const;
  std::vector<int> doubled_coords() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, const Weight& w);

  /// Halve every coordinate; throws if some doubled coordinate is odd.
  Weight halved() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight&, const Weight&) = default;

  /// "(1, 0, -1/2)".
  std::string to_string() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int32_t, kMaxRank> c_{};
};

/// 4 * (a, b) for the standard inner product; exact.
std::int64_t dot4(const Weight& a, const Weight& b);

/// Parse "1,0,-1", "1/2,-1/2" or "0.5,-0.5" into a weight.
Weight parse_weight(std::string_view text);

/// Render one true coordinate as text: "3", "-1/2".
std::string format_coord(std::int32_t doubled);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace lvb
