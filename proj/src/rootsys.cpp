#include "levibranch/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "levibranch/errors.hpp"

namespace lvb {

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "GL" || s == "gl" || s == "A" || s == "a") return Family::GL;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw ValidationError("unsupported root system family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- RootCone

RootCone::RootCone(std::vector<Weight> basis, std::size_t dim) : basis_(std::move(basis)), dim_(dim) {
  const std::size_t k = basis_.size();
  if (k == 0) return;
  // Greedily pick k independent rows of the dim x k matrix.
  std::vector<std::vector<Rational>> echelon;  // reduced rows found so far
  std::vector<std::size_t> lead;               // leading column of each echelon row
  for (std::size_t r = 0; r < dim_ && pivots_.size() < k; ++r) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = basis_[i].doubled(r);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = row[lead[e]];
      if (f.numerator() != 0)
        for (std::size_t i = 0; i < k; ++i) row[i] -= f * echelon[e][i];
    }
    auto nz = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x.numerator() != 0; });
    if (nz == row.end()) continue;
    const std::size_t c = static_cast<std::size_t>(nz - row.begin());
    const Rational p = row[c];
    for (auto& x : row) x /= p;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = echelon[e][c];
      if (f.numerator() != 0)
        for (std::size_t i = 0; i < k; ++i) echelon[e][i] -= f * row[i];
    }
    echelon.push_back(std::move(row));
    lead.push_back(c);
    pivots_.push_back(r);
  }
  if (pivots_.size() != k) throw std::invalid_argument("cone basis is not linearly independent");

  // Invert the k x k submatrix on the pivot rows by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = basis_[i].doubled(pivots_[j]);
    a[j][k + j] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col].numerator() == 0) ++piv;
    std::swap(a[col], a[piv]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t i = 0; i < 2 * k; ++i) a[r][i] -= f * a[col][i];
    }
  }
  inverse_.assign(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inverse_[i][j] = a[i][k + j];
}

std::optional<std::vector<std::int64_t>> RootCone::coordinates(const Weight& v) const {
  const std::size_t k = basis_.size();
  if (k == 0) {
    if (v.is_zero()) return std::vector<std::int64_t>{};
    return std::nullopt;
  }
  std::vector<std::int64_t> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < k; ++j) s += inverse_[i][j] * Rational(v.doubled(pivots_[j]));
    if (s.denominator() != 1) return std::nullopt;
    c[i] = s.numerator();
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k; ++i) s = checked_add(s, checked_mul(c[i], basis_[i].doubled(r)));
    if (s != v.doubled(r)) return std::nullopt;
  }
  return c;
}

bool RootCone::contains(const Weight& v) const {
  auto c = coordinates(v);
  return c && std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
}

std::optional<std::int64_t> RootCone::height(const Weight& v) const {
  auto c = coordinates(v);
  if (!c) return std::nullopt;
  return std::accumulate(c->begin(), c->end(), std::int64_t{0});
}

// ----------------------------------------------------------- pairings

Rational pairing(const Weight& beta, const Weight& alpha) { return Rational(dot4(beta, alpha), 4); }

std::int64_t coroot_pairing(const Weight& beta, const Weight& alpha) {
  const std::int64_t aa = dot4(alpha, alpha);
  if (aa == 0) throw std::invalid_argument("coroot of the zero vector");
  const std::int64_t num = 2 * dot4(beta, alpha);
  if (num % aa != 0)
    throw std::domain_error("non-integral coroot pairing of " + beta.to_string() + " with " +
                            alpha.to_string());
  return num / aa;
}

// ------------------------------------------------------- RootSubsystem

RootSubsystem::RootSubsystem(std::vector<Weight> simple, std::vector<Weight> positive, std::size_t dim)
    : simple_(std::move(simple)), positive_(std::move(positive)), dim_(dim), rho_(dim) {
  Weight sum(dim);
  for (const auto& a : positive_) sum += a;
  rho_ = sum.halved();
  cone_ = RootCone(simple_, dim);
}

bool RootSubsystem::is_dominant(const Weight& x) const {
  for (const auto& a : simple_)
    if (dot4(x, a) < 0) return false;
  return true;
}

Weight RootSubsystem::dominant(const Weight& x, int* parity) const {
  Weight y = x;
  int p = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : simple_) {
      const std::int64_t cp = coroot_pairing(y, a);
      if (cp < 0) {
        y -= cp * a;
        p ^= 1;
        changed = true;
      }
    }
  }
  if (parity) *parity = p;
  return y;
}

std::vector<Weight> RootSubsystem::orbit(const Weight& x) const {
  std::set<Weight> seen{x};
  std::vector<Weight> frontier{x};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& y : frontier)
      for (const auto& a : simple_) {
        const std::int64_t cp = coroot_pairing(y, a);
        if (cp == 0) continue;
        Weight z = y - cp * a;
        if (seen.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ----------------------------------------------------------- RootDatum

RootDatum::RootDatum(Family family, int rank) : family_(family), rank_(rank) {
  const int min_rank = family == Family::D ? 2 : 1;
  if (rank < min_rank || rank > static_cast<int>(kMaxRank))
    throw ValidationError("unsupported rank " + std::to_string(rank) + " for family " +
                          family_name(family));
  const std::size_t n = dim();
  auto e = [n](std::size_t i) { return Weight::unit(n, i); };

  std::vector<Weight> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(i) - e(i + 1));
  switch (family) {
    case Family::GL: break;
    case Family::B: simple.push_back(e(n - 1)); break;
    case Family::C: simple.push_back(2 * e(n - 1)); break;
    case Family::D: simple.push_back(e(n - 2) + e(n - 1)); break;
  }

  std::vector<Weight> positive;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      positive.push_back(e(i) - e(j));
      if (family != Family::GL) positive.push_back(e(i) + e(j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (family == Family::B) positive.push_back(e(i));
    if (family == Family::C) positive.push_back(2 * e(i));
  }
  std::sort(positive.begin(), positive.end(), std::greater<>());
  sys_ = RootSubsystem(std::move(simple), std::move(positive), n);

  highest_ = Weight(n);
  switch (family) {
    case Family::GL:
      if (n >= 2) highest_ = e(0) - e(n - 1);
      break;
    case Family::B: highest_ = n >= 2 ? e(0) + e(1) : e(0); break;
    case Family::C: highest_ = 2 * e(0); break;
    case Family::D: highest_ = e(0) + e(1); break;
  }
}

std::string RootDatum::name() const {
  switch (family_) {
    case Family::GL: return "gl" + std::to_string(rank_);
    case Family::B: return "so" + std::to_string(2 * rank_ + 1);
    case Family::C: return "sp" + std::to_string(2 * rank_);
    case Family::D: return "so" + std::to_string(2 * rank_);
  }
  return "?";
}

const Weight& RootDatum::simple_root(int index1) const {
  if (index1 < 1 || index1 > static_cast<int>(simple_roots().size()))
    throw ValidationError("simple root index " + std::to_string(index1) + " out of range");
  return simple_roots()[static_cast<std::size_t>(index1 - 1)];
}

std::uint64_t RootDatum::weyl_order() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= rank_; ++i) f *= static_cast<std::uint64_t>(i);
  switch (family_) {
    case Family::GL: return f;
    case Family::B:
    case Family::C: return f << rank_;
    case Family::D: return f << (rank_ - 1);
  }
  return f;
}

bool RootDatum::is_positive_root(const Weight& v) const {
  const auto pos = positive_roots();
  return std::find(pos.begin(), pos.end(), v) != pos.end();
}

bool RootDatum::is_root(const Weight& v) const { return is_positive_root(v) || is_positive_root(-v); }

bool RootDatum::in_lattice(const Weight& v) const {
  if (v.dim() != dim()) return false;
  if (family_ == Family::B || family_ == Family::D) return v.has_uniform_parity();
  return v.is_integral();
}

void RootDatum::require_lattice(const Weight& v) const {
  if (!in_lattice(v))
    throw ValidationError("weight " + v.to_string() + " is not in the weight lattice of " + name());
}

std::vector<Weight> RootDatum::roots() const {
  std::vector<Weight> r(positive_roots().begin(), positive_roots().end());
  for (const auto& a : positive_roots()) r.push_back(-a);
  return r;
}

// ------------------------------------------------------------ LeviDatum

std::string LeviComponent::name() const {
  switch (type) {
    case 'A': return "gl" + std::to_string(coords.size());
    case 'B': return "so" + std::to_string(2 * rank + 1);
    case 'C': return "sp" + std::to_string(2 * rank);
    case 'D': return "so" + std::to_string(2 * rank);
  }
  return "?";
}

LeviDatum::LeviDatum(RootDatum parent, std::vector<int> sbar)
    : parent_(std::move(parent)), sbar_(std::move(sbar)) {
  std::sort(sbar_.begin(), sbar_.end());
  if (std::adjacent_find(sbar_.begin(), sbar_.end()) != sbar_.end())
    throw ValidationError("duplicate simple root index in Levi subset");
  std::vector<Weight> simple;
  for (int i : sbar_) simple.push_back(parent_.simple_root(i));
  const std::size_t n = parent_.dim();
  RootCone cone(simple, n);
  std::vector<Weight> positive;
  for (const auto& a : parent_.positive_roots())
    if (cone.contains(a)) positive.push_back(a);
  sys_ = RootSubsystem(simple, std::move(positive), n);

  // Dynkin components of S̄, then merge those sharing coordinates (D2 = A1 x A1).
  std::vector<int> comp(sbar_.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < sbar_.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < sbar_.size(); ++u)
        if (comp[u] < 0 && dot4(simple[t], simple[u]) != 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<std::set<int>> supports(static_cast<std::size_t>(ncomp));
  for (std::size_t s = 0; s < sbar_.size(); ++s)
    for (std::size_t r = 0; r < n; ++r)
      if (simple[s].doubled(r) != 0) supports[static_cast<std::size_t>(comp[s])].insert(static_cast<int>(r));
  // union-find style merge on overlapping supports
  std::vector<int> rep(static_cast<std::size_t>(ncomp));
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[static_cast<std::size_t>(x)] != x) x = rep[static_cast<std::size_t>(x)];
    return x;
  };
  for (int a = 0; a < ncomp; ++a)
    for (int b = a + 1; b < ncomp; ++b) {
      const auto& sa = supports[static_cast<std::size_t>(a)];
      const auto& sb = supports[static_cast<std::size_t>(b)];
      const bool overlap = std::any_of(sa.begin(), sa.end(), [&](int x) { return sb.count(x) > 0; });
      if (overlap) rep[static_cast<std::size_t>(find(b))] = find(a);
    }
  std::map<int, LeviComponent> merged;
  std::vector<bool> covered(n, false);
  for (std::size_t s = 0; s < sbar_.size(); ++s) {
    auto& c = merged[find(comp[s])];
    c.simple.push_back(sbar_[s]);
  }
  for (auto& [key, c] : merged) {
    std::set<int> coords;
    bool has_short = false, has_long = false, has_plus = false;
    for (int idx : c.simple) {
      const Weight& a = parent_.simple_root(idx);
      int nz = 0;
      bool plus = true;
      for (std::size_t r = 0; r < n; ++r)
        if (a.doubled(r) != 0) {
          coords.insert(static_cast<int>(r));
          ++nz;
          if (a.doubled(r) < 0) plus = false;
        }
      if (nz == 1 && parent_.family() == Family::B) has_short = true;
      if (nz == 1 && parent_.family() == Family::C) has_long = true;
      if (nz == 2 && plus) has_plus = true;
    }
    c.coords.assign(coords.begin(), coords.end());
    c.rank = static_cast<int>(c.simple.size());
    if (has_short) c.type = 'B';
    else if (has_long) c.type = 'C';
    else if (has_plus && c.coords.size() == c.simple.size()) c.type = 'D';
    else c.type = 'A';
    for (int x : c.coords) covered[static_cast<std::size_t>(x)] = true;
    components_.push_back(c);
  }
  for (std::size_t r = 0; r < n; ++r)
    if (!covered[r]) components_.push_back(LeviComponent{'A', 0, {static_cast<int>(r)}, {}});
  std::sort(components_.begin(), components_.end(),
            [](const LeviComponent& a, const LeviComponent& b) { return a.coords.front() < b.coords.front(); });
}

std::string LeviDatum::description() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "+";
    s += c.name();
  }
  return s;
}

bool LeviDatum::contains_root(const Weight& v) const {
  const auto pos = positive_roots();
  return std::find(pos.begin(), pos.end(), v) != pos.end() ||
         std::find(pos.begin(), pos.end(), -v) != pos.end();
}

// ----------------------------------------------------------- dominance

bool is_dominant(const Weight& beta, const RootDatum& datum) { return datum.subsystem().is_dominant(beta); }
bool is_dominant(const Weight& beta, const LeviDatum& levi) { return levi.is_dominant(beta); }

bool dominance_leq(const Weight& gamma, const Weight& beta, const RootCone& cone) {
  return cone.contains(beta - gamma);
}

bool dominance_leq_search(const Weight& gamma, const Weight& beta, std::span<const Weight> roots,
                          const Weight& xi) {
  for (const auto& r : roots)
    if (dot4(r, xi) <= 0) throw std::invalid_argument("height functional is not positive on the root set");
  std::unordered_set<Weight, WeightHash> dead;
  auto search = [&](auto& self, const Weight& v) -> bool {
    if (v.is_zero()) return true;
    if (dot4(v, xi) <= 0 || dead.count(v)) return false;
    for (const auto& r : roots)
      if (self(self, v - r)) return true;
    dead.insert(v);
    return false;
  };
  return search(search, beta - gamma);
}

}  // namespace lvb
