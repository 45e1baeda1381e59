#include "levibranch/typea_lr.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "levibranch/errors.hpp"

namespace lvb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts are not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

Partition Partition::doubled() const {
  std::vector<int> c = parts_;
  for (auto& p : c) p *= 2;
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (std::size_t i = 0; i < o.length(); ++i)
    if (o.parts_[i] > parts_[i]) return false;
  return true;
}

Weight Partition::to_weight(std::size_t n) const {
  if (length() > n) throw ValidationError("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  std::vector<int> c(n, 0);
  std::copy(parts_.begin(), parts_.end(), c.begin());
  return Weight::from_integers(c);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void gen_partitions(int n, int max_part, std::size_t max_parts, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_parts != 0 && cur.size() == max_parts) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}

void gen_inside(const Partition& lam, std::size_t row, int left, int cap, std::vector<int>& cur,
                std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (row >= lam.length()) return;
  const int top = std::min({left, cap, lam.part(row)});
  for (int p = top; p >= 1; --p) {
    cur.push_back(p);
    gen_inside(lam, row + 1, left - p, p, cur, out);
    cur.pop_back();
  }
}

struct LrSearch {
  const Partition& lam;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> T;
  std::vector<int> count;
  std::int64_t found = 0;

  void run(std::size_t k) {
    if (k == cells.size()) {
      ++found;
      return;
    }
    const auto [i, j] = cells[k];
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    int lo = 1;
    if (i > 0 && j >= mu.part(ui - 1)) lo = T[ui - 1][uj] + 1;
    int hi = std::min(static_cast<int>(nu.length()), i + 1);
    if (j + 1 < lam.part(ui)) hi = std::min(hi, T[ui][uj + 1]);
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (count[uv] >= nu.part(uv - 1)) continue;
      if (v > 1 && count[uv] >= count[uv - 1]) continue;
      T[ui][uj] = v;
      ++count[uv];
      run(k + 1);
      --count[uv];
    }
    T[ui][uj] = 0;
  }
};

}  // namespace

std::vector<Partition> partitions_of(int n, std::size_t max_parts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, max_parts, cur, out);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& lambda, int n) {
  std::vector<Partition> out;
  if (n < 0 || n > lambda.size()) return out;
  std::vector<int> cur;
  gen_inside(lambda, 0, n, lambda.part(0), cur, out);
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu)) return 0;
  LrSearch s{lambda, mu, nu, {}, {}, std::vector<int>(nu.length() + 1, 0)};
  s.T.assign(lambda.length(), std::vector<int>(static_cast<std::size_t>(lambda.part(0)), 0));
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = lambda.part(i) - 1; j >= mu.part(i); --j) s.cells.emplace_back(static_cast<int>(i), j);
  s.run(0);
  return s.found;
}

std::map<Partition, std::int64_t> lr_product(const Partition& mu, const Partition& nu) {
  std::map<Partition, std::int64_t> out;
  for (const auto& lam : partitions_of(mu.size() + nu.size(), mu.length() + nu.length())) {
    const auto c = lr_coefficient(lam, mu, nu);
    if (c) out[lam] = c;
  }
  return out;
}

std::int64_t multi_lr(const Partition& lambda, std::span<const Partition> factors) {
  if (factors.empty()) return lambda.empty() ? 1 : 0;
  if (factors.size() == 1) return lambda == factors[0] ? 1 : 0;
  const Partition& last = factors.back();
  const auto rest = factors.first(factors.size() - 1);
  std::int64_t total = 0;
  for (const auto& kappa : partitions_inside(lambda, lambda.size() - last.size())) {
    const auto c = lr_coefficient(lambda, kappa, last);
    if (c) total += c * multi_lr(kappa, rest);
  }
  return total;
}

std::int64_t kostka_tableaux(const Partition& lambda, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) return 0;
    total += c;
  }
  if (total != lambda.size()) return 0;
  const std::size_t rows = lambda.length();
  // kappa grows by one horizontal strip of size content[letter] per letter.
  std::function<std::int64_t(std::vector<int>&, std::size_t)> fill = [&](std::vector<int>& kappa,
                                                                         std::size_t letter) -> std::int64_t {
    if (letter == content.size()) return 1;
    std::vector<int> next = kappa;
    std::int64_t ways = 0;
    std::function<void(std::size_t, int)> strip = [&](std::size_t r, int left) {
      if (r == rows) {
        if (left == 0) ways += fill(next, letter + 1);
        return;
      }
      const int cap = r == 0 ? lambda.part(0) : std::min(lambda.part(r), kappa[r - 1]);
      for (int add = 0; add <= std::min(left, cap - kappa[r]); ++add) {
        next[r] = kappa[r] + add;
        strip(r + 1, left - add);
      }
      next[r] = kappa[r];
    };
    strip(0, content[letter]);
    return ways;
  };
  std::vector<int> kappa(rows, 0);
  return fill(kappa, 0);
}

const KostkaMatrix& kostka_matrix(int n) {
  static std::mutex mu;
  static std::map<int, KostkaMatrix> cache;
  if (n < 0) throw ValidationError("negative partition size");
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  KostkaMatrix k;
  k.index = partitions_of(n);
  const std::size_t m = k.index.size();
  k.K.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) k.K[i][j] = kostka_tableaux(k.index[i], k.index[j].parts());
  k.Kinv.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    k.Kinv[j][j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      std::int64_t s = 0;
      for (std::size_t t = i + 1; t <= j; ++t) s += k.K[i][t] * k.Kinv[t][j];
      k.Kinv[i][j] = -s;
    }
  }
  return cache.emplace(n, std::move(k)).first->second;
}

std::int64_t inverse_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ValidationError("inverse Kostka needs partitions of the same size");
  const auto& k = kostka_matrix(lambda.size());
  const auto i = static_cast<std::size_t>(std::find(k.index.begin(), k.index.end(), lambda) - k.index.begin());
  const auto j = static_cast<std::size_t>(std::find(k.index.begin(), k.index.end(), mu) - k.index.begin());
  return k.Kinv[i][j];
}

SignedSplit split_signed(const Weight& mu) {
  std::vector<int> plus, minus;
  for (std::size_t i = 0; i < mu.dim(); ++i) {
    const int x = mu.integer_coord(i);
    if (i > 0 && x > mu.integer_coord(i - 1)) throw ValidationError("weight " + mu.to_string() + " is not weakly decreasing");
    if (x > 0) plus.push_back(x);
    if (x < 0) minus.push_back(-x);
  }
  std::reverse(minus.begin(), minus.end());
  return {Partition(std::move(plus)), Partition(std::move(minus))};
}

Weight join_signed(const SignedSplit& s, std::size_t n) {
  if (s.mu_plus.length() + s.mu_minus.length() > n) throw ValidationError("split does not fit in rank " + std::to_string(n));
  std::vector<int> c(n, 0);
  for (std::size_t i = 0; i < s.mu_plus.length(); ++i) c[i] = s.mu_plus.part(i);
  for (std::size_t i = 0; i < s.mu_minus.length(); ++i) c[n - 1 - i] = -s.mu_minus.part(i);
  return Weight::from_integers(c);
}

bool delta_shift_check(const BranchingContext& ctx, const Weight& lambda, const Weight& mu, int a) {
  if (ctx.datum().family() != Family::GL) throw ValidationError("delta shift needs a gl_n Levi");
  if (a < 0) throw ValidationError("shift must be nonnegative");
  std::vector<int> ones(ctx.datum().dim(), 1);
  const Weight delta = static_cast<std::int64_t>(a) * Weight::from_integers(ones);
  return branch_multiplicity(ctx, lambda, mu) == branch_multiplicity(ctx, lambda + delta, mu + delta);
}

std::vector<Partition> levi_blocks(const LeviDatum& levi, const Weight& mu) {
  std::vector<LeviComponent> comps(levi.components().begin(), levi.components().end());
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.coords.front() < y.coords.front(); });
  std::vector<Partition> out;
  for (const auto& c : comps) {
    std::vector<int> parts;
    for (auto i : c.coords) parts.push_back(mu.integer_coord(i));
    out.emplace_back(std::move(parts));
  }
  return out;
}

bool schur_factorization_check(const BranchingContext& ctx, const Weight& mu, std::span<const Weight> lambdas) {
  if (ctx.datum().family() != Family::GL) throw ValidationError("Schur factorization needs a gl_n Levi");
  for (std::size_t i = 0; i < mu.dim(); ++i)
    if (mu.doubled(i) <= 0) throw ValidationError("mu must have positive coordinates");
  require_levi_dominant(ctx.levi(), mu);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : levi_blocks(ctx.levi(), mu)) blocks.push_back(b.parts());
  for (const auto& lam : lambdas) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < lam.dim(); ++i) parts.push_back(lam.integer_coord(i));
    // twist by a power of det until lambda is polynomial
    const int a = parts.empty() ? 0 : std::max(0, -parts.back());
    for (auto& p : parts) p += a;
    std::vector<Partition> shifted;
    for (auto b : blocks) {
      for (auto& p : b) p += a;
      shifted.emplace_back(std::move(b));
    }
    if (branch_multiplicity(ctx, lam, mu) != multi_lr(Partition(parts), shifted)) return false;
  }
  return true;
}

std::int64_t polarisation_branch(Family family, int n, const Weight& mu, const Partition& lambda) {
  if (family == Family::GL) throw ValidationError("polarisation needs family B, C or D");
  if (n < 1 || mu.dim() != static_cast<std::size_t>(n)) throw ValidationError("weight does not have rank " + std::to_string(n));
  if (lambda.length() > static_cast<std::size_t>(n))
    throw ValidationError("partition " + lambda.to_string() + " has more than n parts");
  const auto s = split_signed(mu);
  const int g = s.mu_plus.size() + s.mu_minus.size();
  const int rest = lambda.size() - g;
  if (rest < 0) return 0;
  if (family != Family::B && rest % 2 != 0) return 0;
  const auto un = static_cast<std::size_t>(n);
  const auto deltas = partitions_of(family == Family::B ? rest : rest / 2, un);
  std::int64_t total = 0;
  for (const auto& gamma : partitions_of(g, un)) {
    const auto c1 = lr_coefficient(gamma, s.mu_plus, s.mu_minus);
    if (!c1) continue;
    for (const auto& d : deltas) {
      const Partition dp = family == Family::B ? d : family == Family::C ? d.doubled() : d.doubled().conjugate();
      total += c1 * lr_coefficient(lambda, gamma, dp);
    }
  }
  return total;
}

}  // namespace lvb
