#include "levibranch/weight.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "levibranch/errors.hpp"

namespace lvb {

namespace {

std::int32_t checked32(std::int64_t v) {
  if (v > INT32_MAX || v < INT32_MIN) throw std::overflow_error("weight coordinate overflow");
  return static_cast<std::int32_t>(v);
}

void check_dim(std::size_t dim) {
  if (dim > kMaxRank)
    throw ValidationError("ambient dimension " + std::to_string(dim) + " exceeds " +
                          std::to_string(kMaxRank));
}

}  // namespace

Weight::Weight(std::size_t dim) {
  check_dim(dim);
  n_ = static_cast<std::uint8_t>(dim);
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
  std::size_t i = 0;
  for (int x : coords) c_[i++] = checked32(2LL * x);
}

Weight Weight::from_integers(std::span<const int> coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.c_[i] = checked32(2LL * coords[i]);
  return w;
}

Weight Weight::from_doubled(std::span<const int> doubled) {
  Weight w(doubled.size());
  for (std::size_t i = 0; i < doubled.size(); ++i) w.c_[i] = doubled[i];
  return w;
}

Weight Weight::from_doubled(std::initializer_list<int> doubled) {
  return from_doubled(std::span<const int>(doubled.begin(), doubled.size()));
}

Weight Weight::unit(std::size_t dim, std::size_t i) {
  Weight w(dim);
  w.c_[i] = 2;
  return w;
}

bool Weight::is_zero() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Weight::is_integral() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (c_[i] % 2 != 0) return false;
  return true;
}

bool Weight::has_uniform_parity() const noexcept {
  if (n_ == 0) return true;
  const int p = c_[0] & 1;
  for (std::size_t i = 1; i < n_; ++i)
    if ((c_[i] & 1) != p) return false;
  return true;
}

int Weight::integer_coord(std::size_t i) const {
  if (c_[i] % 2 != 0) throw ValidationError("coordinate is not an integer: " + to_string());
  return c_[i] / 2;
}

std::vector<int> Weight::doubled_coords() const { return {c_.begin(), c_.begin() + n_}; }

Weight Weight::operator-() const {
  Weight r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.c_[i] = checked32(-static_cast<std::int64_t>(c_[i]));
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.n_ != n_) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < n_; ++i)
    if (__builtin_add_overflow(c_[i], o.c_[i], &c_[i])) throw std::overflow_error("weight overflow");
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.n_ != n_) throw std::invalid_argument("weight dimension mismatch");
  for (std::size_t i = 0; i < n_; ++i)
    if (__builtin_sub_overflow(c_[i], o.c_[i], &c_[i])) throw std::overflow_error("weight overflow");
  return *this;
}

Weight operator*(std::int64_t k, const Weight& w) {
  Weight r(w);
  for (std::size_t i = 0; i < w.n_; ++i) r.c_[i] = checked32(checked_mul(k, w.c_[i]));
  return r;
}

Weight Weight::halved() const {
  Weight r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    if (c_[i] % 2 != 0) throw std::domain_error("cannot halve " + to_string());
    r.c_[i] = c_[i] / 2;
  }
  return r;
}

std::string format_coord(std::int32_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ", ";
    s += format_coord(c_[i]);
  }
  return s + ")";
}

std::int64_t dot4(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("weight dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s = checked_add(s, static_cast<std::int64_t>(a.doubled(i)) * b.doubled(i));
  return s;
}

namespace {

// One coordinate: "3", "-2", "1/2", "-3/2", "0.5", "-1.5".
int parse_doubled_coord(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (tok.empty()) throw ValidationError("empty weight coordinate");
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw ValidationError("bad weight coordinate '" + std::string(tok) + "'");
    return v;
  };
  if (auto slash = tok.find('/'); slash != std::string_view::npos) {
    const long long num = parse_int(tok.substr(0, slash));
    const long long den = parse_int(tok.substr(slash + 1));
    if (den == 1) return static_cast<int>(checked_mul(2, num));
    if (den != 2 || num % 2 == 0)
      throw ValidationError("weight coordinate must be an integer or half-odd-integer: '" +
                            std::string(tok) + "'");
    return static_cast<int>(num);
  }
  if (auto dot = tok.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = tok.substr(dot + 1);
    const std::string_view whole = tok.substr(0, dot);
    const bool neg = !whole.empty() && whole.front() == '-';
    const long long w = (whole == "-" || whole.empty()) ? 0 : parse_int(whole);
    int half = 0;
    if (frac == "5") {
      half = 1;
    } else if (frac.find_first_not_of('0') != std::string_view::npos) {
      throw ValidationError("weight coordinate must be an integer or half-odd-integer: '" +
                            std::string(tok) + "'");
    }
    const long long d = 2 * w + (neg ? -half : half);
    return static_cast<int>(d);
  }
  return static_cast<int>(checked_mul(2, parse_int(tok)));
}

}  // namespace

Weight parse_weight(std::string_view text) {
  std::vector<int> doubled;
  while (!text.empty() && (text.front() == '(' || text.front() == '[')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ')' || text.back() == ']')) text.remove_suffix(1);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(",|", start);
    if (end == std::string_view::npos) end = text.size();
    doubled.push_back(parse_doubled_coord(text.substr(start, end - start)));
    start = end + 1;
  }
  if (doubled.size() > kMaxRank) throw ValidationError("weight has too many coordinates");
  return Weight::from_doubled(doubled);
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ w.dim();
  for (std::size_t i = 0; i < w.dim(); ++i) {
    h ^= static_cast<std::uint32_t>(w.doubled(i));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace lvb
