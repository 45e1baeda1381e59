#include "levibranch/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "levibranch/errors.hpp"

namespace lvb {

std::string_view coverage_name(Coverage c) {
  switch (c) {
    case Coverage::SameChamber: return "SAME_CHAMBER";
    case Coverage::FarFromWalls: return "FAR_FROM_WALLS";
    case Coverage::Mu2RhoDominant: return "MU_2RHO_DOMINANT";
    case Coverage::TypeA: return "TYPE_A";
    case Coverage::Polarisation: return "POLARISATION";
  }
  return "NONE";
}

nlohmann::json weyl_element_to_json(const WeylElement& w) {
  auto images = nlohmann::json::array();
  for (std::size_t i = 0; i < w.dim(); ++i) images.push_back(w.sign_at(i) * (w.perm(i) + 1));
  return {{"images", images}, {"identity", w.is_identity()}};
}

nlohmann::json PairVerdict::to_json() const {
  nlohmann::json j;
  j["mu"] = weight_to_json(mu);
  j["nu"] = weight_to_json(nu);
  j["equal"] = equal;
  j["auto"] = relating_auto ? weyl_element_to_json(*relating_auto) : nlohmann::json(nullptr);
  auto cov = nlohmann::json::array();
  for (auto c : covered_by) cov.push_back(coverage_name(c));
  j["covered"] = cov;
  j["counterexample"] = counterexample;
  return j;
}

nlohmann::json SearchSummary::to_json() const {
  return {{"weights", weights},           {"groups", groups},         {"pairs_tested", pairs_tested},
          {"equal_pairs", equal_pairs},   {"autos_found", autos_found}, {"counterexamples", counterexamples},
          {"wall_clock_seconds", seconds}};
}

namespace {

Weight leading_key(const BranchingContext& ctx, const Weight& mu) {
  return dominant_weight(ctx.datum(), mu + 2 * ctx.levi().rho_bar());
}

PairVerdict make_verdict(const BranchingContext& ctx, const Weight& mu, const Weight& nu, bool equal) {
  PairVerdict v;
  v.mu = mu;
  v.nu = nu;
  v.equal = equal;
  v.relating_auto = relating_automorphism(ctx, mu, nu);
  v.covered_by = coverage(ctx, mu, nu);
  v.counterexample = equal && !v.relating_auto;
  if (v.relating_auto && !equal)
    throw std::logic_error("weights related by a diagram automorphism have different M functions: " + mu.to_string() +
                           " " + nu.to_string());
  if (v.counterexample && !v.covered_by.empty())
    throw std::logic_error("covered pair without a relating automorphism: " + mu.to_string() + " " + nu.to_string());
  return v;
}

std::string system_key(const LeviDatum& levi) {
  std::string s = levi.parent().name() + " S=";
  for (int i : levi.sbar()) s += std::to_string(i) + ",";
  return s;
}

}  // namespace

bool induced_equal(const BranchingContext& ctx, const Weight& mu, const Weight& nu) {
  require_levi_dominant(ctx.levi(), mu);
  require_levi_dominant(ctx.levi(), nu);
  if (mu == nu) return true;
  if (dominant_weight(ctx.datum(), mu) != dominant_weight(ctx.datum(), nu)) return false;
  if (leading_key(ctx, mu) != leading_key(ctx, nu)) return false;
  return build_M(ctx, mu, false) == build_M(ctx, nu, false);
}

std::optional<WeylElement> relating_automorphism(const BranchingContext& ctx, const Weight& mu, const Weight& nu) {
  require_levi_dominant(ctx.levi(), mu);
  require_levi_dominant(ctx.levi(), nu);
  if (mu == nu) return WeylElement::identity(mu.dim());
  for (const auto& u : ctx.automorphisms())
    if (u.act(mu) == nu) return u;
  return std::nullopt;
}

bool polarisation_case(const LeviDatum& levi) {
  const auto& g = levi.parent();
  if (g.family() == Family::GL) return false;
  if (g.family() == Family::D && g.rank() % 2 != 0) return false;
  const auto comps = levi.components();
  return comps.size() == 1 && comps[0].type == 'A' && comps[0].coords.size() == g.dim();
}

std::vector<Coverage> coverage(const BranchingContext& ctx, const Weight& mu, const Weight& nu) {
  const auto& g = ctx.datum();
  std::vector<Coverage> out;
  const std::vector<Weight> both{mu, nu};
  if (common_chamber(g, both)) out.push_back(Coverage::SameChamber);
  if (far_from_walls(ctx, mu) && far_from_walls(ctx, nu)) out.push_back(Coverage::FarFromWalls);
  const Weight r2 = 2 * ctx.levi().rho_bar();
  if (is_dominant(mu + r2, g) || is_dominant(nu + r2, g)) out.push_back(Coverage::Mu2RhoDominant);
  if (g.family() == Family::GL) out.push_back(Coverage::TypeA);
  if (polarisation_case(ctx.levi())) out.push_back(Coverage::Polarisation);
  return out;
}

PairVerdict classify_pair(const BranchingContext& ctx, const Weight& mu, const Weight& nu) {
  return make_verdict(ctx, mu, nu, induced_equal(ctx, mu, nu));
}

std::vector<Weight> levi_box(const LeviDatum& levi, int bound) {
  if (bound < 0) throw ValidationError("coordinate bound must be nonnegative");
  const auto& g = levi.parent();
  const bool spin = g.family() == Family::B || g.family() == Family::D;
  std::vector<Weight> out;
  for (int parity = 0; parity < (spin ? 2 : 1); ++parity) {
    const int lo = -2 * bound + parity, hi = 2 * bound - parity;
    if (lo > hi) continue;
    std::vector<int> c(g.dim(), lo);
    while (true) {
      const Weight w = Weight::from_doubled(c);
      if (levi.is_dominant(w) && g.in_lattice(w)) out.push_back(w);
      std::size_t i = 0;
      while (i < c.size() && c[i] + 2 > hi) c[i++] = lo;
      if (i == c.size()) break;
      c[i] += 2;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchSummary search_box(const BranchingContext& ctx, int bound, const GroupSink& sink, unsigned threads,
                         std::size_t first_group) {
  const auto start = std::chrono::steady_clock::now();
  check_group_guard(ctx.datum(), ctx.options().group_guard);
  SearchSummary s;
  const auto box = levi_box(ctx.levi(), bound);
  std::map<Weight, std::vector<Weight>> by_orbit;
  for (const auto& w : box) by_orbit[dominant_weight(ctx.datum(), w)].push_back(w);
  std::vector<std::vector<Weight>> groups;
  for (auto& [k, v] : by_orbit) groups.push_back(std::move(v));
  s.weights = box.size();
  s.groups = groups.size();
  // force the lazily built group data before workers start
  ctx.automorphisms();

  auto run_group = [&](std::size_t index) {
    const auto& members = groups[index];
    GroupReport r;
    r.index = index;
    std::vector<Weight> keys;
    for (const auto& m : members) keys.push_back(leading_key(ctx, m));
    std::vector<std::optional<MFunction>> ms(members.size());
    auto M = [&](std::size_t i) -> const MFunction& {
      if (!ms[i]) ms[i] = build_M(ctx, members[i], false);
      return *ms[i];
    };
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++r.pairs_tested;
        if (keys[i] == keys[j] && M(i) == M(j)) {
          r.verdicts.push_back(make_verdict(ctx, members[i], members[j], true));
        } else if (relating_automorphism(ctx, members[i], members[j])) {
          throw std::logic_error("weights related by a diagram automorphism have different M functions: " +
                                 members[i].to_string() + " " + members[j].to_string());
        }
      }
    return r;
  };

  const unsigned workers = std::max(1u, threads);
  const std::size_t batch = workers * 8;
  for (std::size_t base = first_group; base < groups.size(); base += batch) {
    const std::size_t end = std::min(groups.size(), base + batch);
    std::vector<GroupReport> results(end - base);
    if (workers == 1) {
      for (std::size_t g = base; g < end; ++g) results[g - base] = run_group(g);
    } else {
      std::atomic<std::size_t> next{base};
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
          try {
            for (std::size_t g; (g = next.fetch_add(1)) < end;) results[g - base] = run_group(g);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t g = base; g < end; ++g) {
      const auto& r = results[g - base];
      s.pairs_tested += r.pairs_tested;
      for (const auto& v : r.verdicts) {
        ++s.equal_pairs;
        if (v.relating_auto) ++s.autos_found;
        if (v.counterexample) ++s.counterexamples;
      }
      if (sink) sink(r);
    }
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

SearchSummary search_to_file(const BranchingContext& ctx, int bound, const std::filesystem::path& certs,
                             unsigned threads, bool resume) {
  namespace fs = std::filesystem;
  const fs::path ckpt = certs.string() + ".ckpt";
  const std::string key = system_key(ctx.levi());
  std::size_t first = 0;
  std::uintmax_t offset = 0;
  SearchSummary prior;
  std::error_code ec;
  if (resume && fs::exists(ckpt)) {
    std::ifstream in(ckpt);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError("unreadable checkpoint " + ckpt.string() + ": " + e.what());
    }
    if (j.value("system", "") != key || j.value("bound", -1) != bound)
      throw IoError("checkpoint " + ckpt.string() + " belongs to a different search");
    first = j.at("next_group").get<std::size_t>();
    offset = j.at("offset").get<std::uintmax_t>();
    prior.pairs_tested = j.at("pairs_tested");
    prior.equal_pairs = j.at("equal_pairs");
    prior.autos_found = j.at("autos_found");
    prior.counterexamples = j.at("counterexamples");
    if (!fs::exists(certs) || fs::file_size(certs) < offset)
      throw IoError("certificate file " + certs.string() + " is shorter than its checkpoint");
    fs::resize_file(certs, offset, ec);
    if (ec) throw IoError("cannot truncate " + certs.string() + ": " + ec.message());
  } else {
    fs::remove(ckpt, ec);
  }
  std::ofstream out(certs, resume && first > 0 ? std::ios::app | std::ios::binary : std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open " + certs.string() + " for writing");

  SearchSummary running = prior;
  auto write_ckpt = [&](std::size_t next_group) {
    const nlohmann::json j{{"system", key},
                           {"bound", bound},
                           {"next_group", next_group},
                           {"offset", offset},
                           {"pairs_tested", running.pairs_tested},
                           {"equal_pairs", running.equal_pairs},
                           {"autos_found", running.autos_found},
                           {"counterexamples", running.counterexamples}};
    const fs::path tmp = ckpt.string() + ".tmp";
    {
      std::ofstream c(tmp, std::ios::trunc);
      c << j.dump() << '\n';
      if (!c) throw IoError("cannot write checkpoint " + tmp.string());
    }
    fs::rename(tmp, ckpt, ec);
    if (ec) throw IoError("cannot replace checkpoint " + ckpt.string() + ": " + ec.message());
  };

  SearchSummary s = search_box(
      ctx, bound,
      [&](const GroupReport& r) {
        running.pairs_tested += r.pairs_tested;
        for (const auto& v : r.verdicts) {
          const std::string line = v.to_json().dump() + "\n";
          out << line;
          offset += line.size();
          ++running.equal_pairs;
          if (v.relating_auto) ++running.autos_found;
          if (v.counterexample) ++running.counterexamples;
        }
        out.flush();
        if (!out) throw IoError("write to " + certs.string() + " failed");
        write_ckpt(r.index + 1);
      },
      threads, first);
  s.pairs_tested += prior.pairs_tested;
  s.equal_pairs += prior.equal_pairs;
  s.autos_found += prior.autos_found;
  s.counterexamples += prior.counterexamples;
  running = s;
  write_ckpt(static_cast<std::size_t>(s.groups));
  return s;
}

}  // namespace lvb
