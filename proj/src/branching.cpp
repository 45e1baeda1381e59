#include "levibranch/branching.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "levibranch/errors.hpp"

namespace lvb {

BranchingContext::BranchingContext(LeviDatum levi, BranchingOptions opts)
    : levi_(std::move(levi)), opts_(opts), pbar_(PartitionTable::for_levi(levi_)) {
  if (opts_.threads == 0) opts_.threads = 1;
}

const std::vector<WeylElement>& BranchingContext::group() const {
  std::call_once(group_once_, [&] { group_ = enumerate_group(datum(), opts_.group_guard); });
  return group_;
}

const std::vector<WeylElement>& BranchingContext::levi_group() const {
  std::call_once(levi_once_, [&] { levi_group_ = levi_weyl_group(levi_, opts_.group_guard); });
  return levi_group_;
}

const Transversal& BranchingContext::transversal() const {
  std::call_once(u_once_, [&] {
    check_group_guard(datum(), opts_.group_guard);
    for (const auto& w : group())
      if (in_transversal(w, levi_)) u_.elements.push_back(w);
  });
  return u_;
}

const std::vector<WeylElement>& BranchingContext::automorphisms() const {
  std::call_once(auto_once_, [&] { autos_ = diagram_automorphisms(levi_, transversal()); });
  return autos_;
}

void require_g_dominant(const RootDatum& datum, const Weight& lambda) {
  if (lambda.dim() != datum.dim())
    throw ValidationError("weight " + lambda.to_string() + " has the wrong number of coordinates");
  datum.require_lattice(lambda);
  if (!is_dominant(lambda, datum)) throw ValidationError(lambda.to_string() + " is not dominant for " + datum.name());
}

void require_levi_dominant(const LeviDatum& levi, const Weight& mu) {
  if (mu.dim() != levi.parent().dim())
    throw ValidationError("weight " + mu.to_string() + " has the wrong number of coordinates");
  levi.parent().require_lattice(mu);
  if (!levi.is_dominant(mu))
    throw ValidationError(mu.to_string() + " is not dominant for the Levi " + levi.description());
}

std::int64_t branch_multiplicity(const BranchingContext& ctx, const Weight& lambda, const Weight& mu) {
  const RootDatum& g = ctx.datum();
  require_g_dominant(g, lambda);
  require_levi_dominant(ctx.levi(), mu);
  const auto& group = ctx.group();
  const Weight lr = lambda + g.rho();
  const Weight mr = mu + g.rho();
  const PartitionTable& pbar = ctx.pbar();
  auto partial = [&](std::size_t lo, std::size_t hi) {
    std::int64_t s = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const Weight arg = group[i].act(lr) - mr;
      // every root of R+ pairs positively with rho
      if (dot4(arg, g.rho()) < 0) continue;
      const auto p = pbar.count(arg);
      if (p != 0) s = checked_add(s, group[i].sign() * static_cast<std::int64_t>(p));
    }
    return s;
  };
  const std::size_t n = group.size();
  const unsigned t = std::min<std::size_t>(ctx.options().threads, std::max<std::size_t>(1, n / 64));
  std::int64_t total = 0;
  if (t <= 1) {
    total = partial(0, n);
  } else {
    std::vector<std::int64_t> sums(t, 0);
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k)
      pool.emplace_back([&, k] { sums[k] = partial(n * k / t, n * (k + 1) / t); });
    for (auto& th : pool) th.join();
    for (auto s : sums) total = checked_add(total, s);
  }
  if (total < 0) throw std::logic_error("negative branching multiplicity for " + lambda.to_string());
  return total;
}

std::map<Weight, std::int64_t> branch_by_restriction(const BranchingContext& ctx, const Weight& lambda) {
  require_g_dominant(ctx.datum(), lambda);
  const WeightPolynomial chi = weyl_character(ctx.datum(), lambda, ctx.options().character_budget);
  const RootSubsystem& lsys = ctx.levi().subsystem();
  const Weight& rb = ctx.levi().rho_bar();
  std::unordered_map<Weight, std::int64_t, WeightHash> rest(chi.terms().begin(), chi.terms().end());
  // Highest (., rhō) first; ties in canonical order. Subtracting a Levi
  // character only touches weights strictly later in this order.
  std::vector<Weight> order;
  order.reserve(chi.size());
  for (const auto& [w, c] : chi.terms()) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& x, const Weight& y) { return dot4(x, rb) > dot4(y, rb); });
  std::map<Weight, std::int64_t> row;
  for (const auto& x : order) {
    const std::int64_t c = rest[x];
    if (c == 0) continue;
    if (c < 0 || !lsys.is_dominant(x))
      throw std::logic_error("restriction oracle: bad residual at " + x.to_string());
    row[x] = c;
    const WeightPolynomial sub = weyl_character(lsys, x, ctx.options().character_budget);
    for (const auto& [y, m] : sub.terms()) {
      auto it = rest.find(y);
      if (it == rest.end()) throw std::logic_error("restriction oracle: Levi weight outside the character");
      it->second = checked_add(it->second, checked_mul(-c, m));
    }
  }
  for (const auto& [w, c] : rest)
    if (c != 0) throw std::logic_error("restriction oracle left a nonzero residue");
  return row;
}

std::vector<Weight> lambda_box(const RootDatum& datum, const Weight& mu, int k) {
  const auto theta = datum.cone().coordinates(datum.highest_root());
  const auto simple = datum.simple_roots();
  std::vector<std::int64_t> hi(simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i) hi[i] = k * (*theta)[i];
  std::vector<std::int64_t> n(simple.size(), 0);
  std::vector<Weight> out;
  while (true) {
    Weight lam = mu;
    for (std::size_t i = 0; i < simple.size(); ++i) lam += n[i] * simple[i];
    if (datum.in_lattice(lam) && is_dominant(lam, datum)) out.push_back(lam);
    std::size_t i = 0;
    while (i < n.size() && n[i] == hi[i]) n[i++] = 0;
    if (i == n.size()) break;
    ++n[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchingRow branching_row(const BranchingContext& ctx, const Weight& mu, int k) {
  require_levi_dominant(ctx.levi(), mu);
  BranchingRow row{mu, {}};
  for (const auto& lam : lambda_box(ctx.datum(), mu, k)) row.entries[lam] = branch_multiplicity(ctx, lam, mu);
  return row;
}

// ---------------------------------------------------------------- M_mu

std::int64_t MFunction::coefficient(const RootDatum& datum, const Weight& x) const {
  const Weight d = dominant_weight(datum, x);
  auto it = a.find(d);
  if (it == a.end()) return 0;
  return checked_mul(it->second, static_cast<std::int64_t>(stabilizer_order(datum, d)));
}

WeightPolynomial MFunction::expand(const RootDatum& datum) const {
  WeightPolynomial p;
  for (const auto& [lam, c] : a) {
    const auto st = static_cast<std::int64_t>(stabilizer_order(datum, lam));
    for (const auto& x : datum.subsystem().orbit(lam)) p.add(x, checked_mul(c, st));
  }
  return p;
}

namespace {

std::map<Weight, std::int64_t> m_expansion(const BranchingContext& ctx, const Weight& mu) {
  const Weight& rb = ctx.levi().rho_bar();
  std::map<Weight, std::int64_t> a;
  for (const auto& w : ctx.levi_group()) {
    const Weight lam = dominant_weight(ctx.datum(), mu + rb - w.act(rb));
    auto& slot = a[lam];
    slot += w.sign();
  }
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

void dual_check(const BranchingContext& ctx, const MFunction& M) {
  const RootDatum& g = ctx.datum();
  const Weight& rb = ctx.levi().rho_bar();
  const Weight top = M.mu + rb;
  std::unordered_map<Weight, std::int64_t, WeightHash> prod;
  for (const auto& w1 : ctx.levi_group()) {
    const Weight x = w1.act(top);
    for (const auto& w2 : ctx.levi_group()) prod[x + w2.act(rb)] += w1.sign() * w2.sign();
  }
  std::set<Weight> support;
  for (const auto& [x, c] : prod)
    if (c != 0) support.insert(dominant_weight(g, x));
  for (const auto& [lam, c] : M.a) support.insert(lam);
  const int eps0 = ctx.levi().longest_sign();
  std::vector<WeylElement> uinv;
  for (const auto& u : ctx.transversal().elements) uinv.push_back(u.inverse());
  for (const auto& lam : support) {
    std::int64_t rhs = 0;
    for (const auto& v : uinv) {
      auto it = prod.find(v.act(lam));
      if (it != prod.end()) rhs = checked_add(rhs, it->second);
    }
    rhs *= eps0;
    if (rhs != M.coefficient(g, lam))
      throw std::logic_error("M-function constructions disagree at " + lam.to_string() + " for mu = " +
                             M.mu.to_string());
  }
}

}  // namespace

MFunction build_M(const BranchingContext& ctx, const Weight& mu, bool check) {
  require_levi_dominant(ctx.levi(), mu);
  check_group_guard(ctx.datum(), ctx.options().group_guard);
  MFunction M{mu, m_expansion(ctx, mu)};
  if (check) dual_check(ctx, M);
  return M;
}

std::int64_t a_coefficient(const BranchingContext& ctx, const Weight& lambda, const Weight& mu) {
  require_levi_dominant(ctx.levi(), mu);
  const Weight d = dominant_weight(ctx.datum(), lambda);
  const Weight& rb = ctx.levi().rho_bar();
  std::int64_t s = 0;
  for (const auto& w : ctx.levi_group())
    if (dominant_weight(ctx.datum(), mu + rb - w.act(rb)) == d) s += w.sign();
  return s;
}

LeadingTerm leading_term(const BranchingContext& ctx, const MFunction& M) {
  const RootDatum& g = ctx.datum();
  const Weight Lambda = dominant_weight(g, M.mu + 2 * ctx.levi().rho_bar());
  LeadingTerm t{Lambda, 0, 0, true};
  if (auto it = M.a.find(Lambda); it != M.a.end()) t.m_coefficient = it->second;
  t.e_coefficient = M.coefficient(g, Lambda);
  for (const auto& [lam, c] : M.a) {
    if (lam == Lambda) continue;
    if (!dominance_leq(lam, Lambda, g.cone())) {
      t.others_below = false;
      break;
    }
  }
  return t;
}

LeadingTerm leading_term(const BranchingContext& ctx, const Weight& mu) {
  return leading_term(ctx, build_M(ctx, mu, false));
}

std::vector<Weight> e_set(const BranchingContext& ctx, const Weight& mu) {
  const Weight& rb = ctx.levi().rho_bar();
  std::vector<Weight> out;
  for (const auto& w : ctx.levi_group()) out.push_back(mu + rb - w.act(rb));
  std::sort(out.begin(), out.end());
  return out;
}

bool far_from_walls(const BranchingContext& ctx, const Weight& mu) {
  check_group_guard(ctx.datum(), ctx.options().group_guard);
  const auto e = e_set(ctx, mu);
  return common_chamber(ctx.datum(), e).has_value();
}

}  // namespace lvb
