#include "levibranch/weylgrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "levibranch/errors.hpp"

namespace lvb {

// ---------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.n_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.perm_[i] = static_cast<std::int8_t>(i);
    w.signs_[i] = 1;
  }
  return w;
}

WeylElement::WeylElement(std::span<const int> perm, std::span<const int> signs) {
  if (perm.size() != signs.size() || perm.size() > kMaxRank)
    throw ValidationError("Weyl element: perm and signs must have equal length <= 8");
  n_ = static_cast<std::uint8_t>(perm.size());
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) || hit[static_cast<std::size_t>(perm[i])])
      throw ValidationError("Weyl element: not a permutation");
    hit[static_cast<std::size_t>(perm[i])] = true;
    if (signs[i] != 1 && signs[i] != -1) throw ValidationError("Weyl element: signs must be +1 or -1");
    perm_[i] = static_cast<std::int8_t>(perm[i]);
    signs_[i] = static_cast<std::int8_t>(signs[i]);
  }
}

WeylElement WeylElement::reflection(const Weight& alpha) {
  const std::size_t n = alpha.dim();
  std::vector<int> perm(n), signs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Weight e = Weight::unit(n, k);
    const Weight img = e - coroot_pairing(e, alpha) * alpha;
    int where = -1;
    for (std::size_t m = 0; m < n; ++m) {
      if (img.doubled(m) == 0) continue;
      if (where >= 0 || std::abs(img.doubled(m)) != 2)
        throw std::invalid_argument("reflection is not a signed permutation");
      where = static_cast<int>(m);
    }
    perm[k] = where;
    signs[k] = img.doubled(static_cast<std::size_t>(where)) > 0 ? 1 : -1;
  }
  return WeylElement(perm, signs);
}

Weight WeylElement::act(const Weight& beta) const {
  Weight r(beta.dim());
  for (std::size_t i = 0; i < n_; ++i)
    r.set_doubled(static_cast<std::size_t>(perm_[i]), signs_[i] * beta.doubled(i));
  return r;
}

int WeylElement::sign_product() const {
  int s = 1;
  for (std::size_t i = 0; i < n_; ++i) s *= signs_[i];
  return s;
}

int WeylElement::sign() const {
  // parity of the permutation by cycle decomposition
  int s = sign_product();
  std::array<bool, kMaxRank> seen{};
  for (std::size_t i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm_[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (perm_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
  return true;
}

bool WeylElement::belongs_to(const RootDatum& datum) const {
  if (dim() != datum.dim()) return false;
  switch (datum.family()) {
    case Family::GL:
      for (std::size_t i = 0; i < n_; ++i)
        if (signs_[i] != 1) return false;
      return true;
    case Family::D: return sign_product() == 1;
    default: return true;
  }
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("Weyl element dimension mismatch");
  WeylElement r;
  r.n_ = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto mid = static_cast<std::size_t>(o.perm_[i]);
    r.perm_[i] = perm_[mid];
    r.signs_[i] = static_cast<std::int8_t>(o.signs_[i] * signs_[mid]);
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.n_ = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto p = static_cast<std::size_t>(perm_[i]);
    r.perm_[p] = static_cast<std::int8_t>(i);
    r.signs_[p] = signs_[i];
  }
  return r;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += " ";
    s += (signs_[i] < 0 ? "-" : "+");
    s += std::to_string(perm_[i] + 1);
  }
  return s + "]";
}

// ----------------------------------------------------------- enumeration

void check_group_guard(const RootDatum& datum, std::uint64_t guard) {
  if (datum.weyl_order() > guard) throw GroupSizeError(datum.weyl_order(), guard);
}

void for_each_element(const RootDatum& datum, const std::function<void(const WeylElement&)>& fn,
                      std::uint64_t guard) {
  check_group_guard(datum, guard);
  const std::size_t n = datum.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> signs(n);
  const unsigned masks = datum.family() == Family::GL ? 1u : (1u << n);
  do {
    for (unsigned m = 0; m < masks; ++m) {
      if (datum.family() == Family::D && __builtin_popcount(m) % 2 != 0) continue;
      for (std::size_t i = 0; i < n; ++i) signs[i] = (m >> i) & 1u ? -1 : 1;
      fn(WeylElement(perm, signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<WeylElement> enumerate_group(const RootDatum& datum, std::uint64_t guard) {
  check_group_guard(datum, guard);
  std::vector<WeylElement> out;
  out.reserve(datum.weyl_order());
  for_each_element(datum, [&](const WeylElement& w) { out.push_back(w); }, guard);
  return out;
}

std::vector<WeylElement> levi_weyl_group(const LeviDatum& levi, std::uint64_t guard) {
  std::vector<WeylElement> gens;
  for (const auto& a : levi.simple_roots()) gens.push_back(WeylElement::reflection(a));
  const auto id = WeylElement::identity(levi.parent().dim());
  std::set<WeylElement> seen{id};
  std::vector<WeylElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        WeylElement y = x * s;
        if (seen.insert(y).second) next.push_back(y);
      }
    if (seen.size() > guard) throw GroupSizeError(seen.size(), guard);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ------------------------------------------------------ dominant chamber

DominantRep dominant_representative(const RootDatum& datum, const Weight& beta) {
  const std::size_t n = datum.dim();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const bool signed_family = datum.family() != Family::GL;
  auto key = [&](int i) {
    const int v = beta.doubled(static_cast<std::size_t>(i));
    return signed_family ? std::abs(v) : v;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });
  std::vector<int> perm(n), signs(n, 1);
  for (std::size_t p = 0; p < n; ++p) {
    const auto i = static_cast<std::size_t>(order[p]);
    perm[i] = static_cast<int>(p);
    if (signed_family && beta.doubled(i) < 0) signs[i] = -1;
  }
  if (datum.family() == Family::D) {
    int prod = 1;
    for (int s : signs) prod *= s;
    if (prod < 0) signs[static_cast<std::size_t>(order[n - 1])] *= -1;
  }
  WeylElement w(perm, signs);
  return {w, w.act(beta)};
}

Weight dominant_weight(const RootDatum& datum, const Weight& beta) {
  return dominant_representative(datum, beta).lambda;
}

std::uint64_t stabilizer_order(const RootDatum& datum, const Weight& lambda) {
  auto fact = [](std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::map<int, std::uint64_t> mult;
  std::uint64_t zeros = 0;
  for (std::size_t i = 0; i < lambda.dim(); ++i) {
    const int v = lambda.doubled(i);
    if (datum.family() == Family::GL) {
      ++mult[v];
    } else if (v == 0) {
      ++zeros;
    } else {
      ++mult[std::abs(v)];
    }
  }
  std::uint64_t order = 1;
  for (const auto& [v, m] : mult) order *= fact(m);
  if (zeros > 0) {
    std::uint64_t z = fact(zeros) << zeros;
    if (datum.family() == Family::D) z >>= 1;
    order *= z;
  }
  return order;
}

std::uint64_t orbit_size(const RootDatum& datum, const Weight& beta) {
  return datum.weyl_order() / stabilizer_order(datum, dominant_weight(datum, beta));
}

// ---------------------------------------------------------- transversal

bool in_transversal(const WeylElement& u, const LeviDatum& levi) {
  const Weight& rho = levi.parent().rho();
  for (const auto& a : levi.simple_roots())
    if (dot4(u.act(a), rho) <= 0) return false;
  return true;
}

Transversal transversal_U(const LeviDatum& levi, std::uint64_t guard) {
  Transversal t;
  for_each_element(
      levi.parent(),
      [&](const WeylElement& w) {
        if (in_transversal(w, levi)) t.elements.push_back(w);
      },
      guard);
  return t;
}

CosetDecomposition coset_decompose(const WeylElement& w, const LeviDatum& levi) {
  const Weight& rho = levi.parent().rho();
  std::vector<WeylElement> refl;
  for (const auto& a : levi.simple_roots()) refl.push_back(WeylElement::reflection(a));
  WeylElement u = w;
  bool descent = true;
  while (descent) {
    descent = false;
    for (std::size_t k = 0; k < refl.size(); ++k) {
      if (dot4(u.act(levi.simple_roots()[k]), rho) < 0) {
        u = u * refl[k];
        descent = true;
      }
    }
  }
  return {u, u.inverse() * w};
}

std::vector<WeylElement> diagram_automorphisms(const LeviDatum& levi, const Transversal& transversal) {
  std::vector<Weight> target(levi.positive_roots().begin(), levi.positive_roots().end());
  std::sort(target.begin(), target.end());
  std::vector<WeylElement> out;
  for (const auto& u : transversal.elements) {
    std::vector<Weight> img;
    img.reserve(target.size());
    for (const auto& a : target) img.push_back(u.act(a));
    std::sort(img.begin(), img.end());
    if (img != target) continue;
    if (u.act(levi.rho_bar()) != levi.rho_bar())
      throw std::logic_error("diagram automorphism does not fix rho_bar: " + u.to_string());
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> diagram_automorphisms(const LeviDatum& levi, std::uint64_t guard) {
  return diagram_automorphisms(levi, transversal_U(levi, guard));
}

std::optional<Straightened> straighten(const RootDatum& datum, const Weight& beta) {
  const Weight x = beta + datum.rho();
  auto rep = dominant_representative(datum, x);
  if (stabilizer_order(datum, rep.lambda) != 1) return std::nullopt;
  return Straightened{rep.w.sign(), rep.lambda - datum.rho()};
}

std::optional<WeylElement> common_chamber(const RootDatum& datum, std::span<const Weight> points) {
  if (points.empty()) return WeylElement::identity(datum.dim());
  // start from the most regular point: fewest candidate chambers
  std::size_t best = 0;
  std::uint64_t best_stab = UINT64_MAX;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto s = stabilizer_order(datum, dominant_weight(datum, points[i]));
    if (s < best_stab) {
      best_stab = s;
      best = i;
    }
  }
  const auto rep = dominant_representative(datum, points[best]);
  std::vector<WeylElement> gens;
  for (const auto& a : datum.simple_roots())
    if (dot4(rep.lambda, a) == 0) gens.push_back(WeylElement::reflection(a));
  const auto id = WeylElement::identity(datum.dim());
  std::set<WeylElement> stab{id};
  std::vector<WeylElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        WeylElement y = x * s;
        if (stab.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  const RootSubsystem& sys = datum.subsystem();
  for (const auto& v : stab) {
    const WeylElement c = v * rep.w;
    bool ok = true;
    for (const auto& p : points)
      if (!sys.is_dominant(c.act(p))) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

int length(const WeylElement& w, const RootDatum& datum) {
  int l = 0;
  for (const auto& a : datum.positive_roots())
    if (dot4(w.act(a), datum.rho()) < 0) ++l;
  return l;
}

}  // namespace lvb
