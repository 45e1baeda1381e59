#include "levibranch/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "levibranch/branching.hpp"
#include "levibranch/equivalence.hpp"
#include "levibranch/errors.hpp"
#include "levibranch/typea_lr.hpp"

namespace lvb {

namespace {

using nlohmann::json;

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" []");
    if (b == std::string::npos) continue;
    const auto e = tok.find_last_not_of(" []");
    const std::string t = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad integer '" + t + "'");
    }
    if (used != t.size()) throw ValidationError("bad integer '" + t + "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& s) {
  const auto parts = parse_index_list(s);
  return Partition(parts);
}

std::string text_of(const json& j, const char* key) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (const auto& x : j) {
      if (!x.is_number() && !x.is_string()) throw ValidationError(std::string("bad entry in '") + key + "'");
      if (!s.empty()) s += ",";
      s += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return s;
  }
  throw ValidationError(std::string("'") + key + "' must be a string or an array");
}

template <class T>
T number_of(const json& j, const char* key) {
  if (!j.is_number_integer()) throw ValidationError(std::string("'") + key + "' must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw ValidationError(std::string("'") + key + "' must be nonnegative");
  return static_cast<T>(v);
}

bool bool_of(const json& j, const char* key) {
  if (!j.is_boolean()) throw ValidationError(std::string("'") + key + "' must be true or false");
  return j.get<bool>();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json weights_json(const std::vector<WeylElement>& ws) {
  auto a = json::array();
  for (const auto& w : ws) a.push_back(weyl_element_to_json(w)["images"]);
  return a;
}

std::string partition_cell(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.length(); ++i) s += (i ? " " : "") + std::to_string(p.part(i));
  return s;
}

struct Job {
  JobConfig cfg;
  std::ostream& out;
  std::ostream& err;

  std::unique_ptr<BranchingContext> context() const {
    if (!cfg.family) throw ValidationError("no root system given (use --system or the config key 'system')");
    BranchingOptions o;
    if (cfg.group_guard) o.group_guard = cfg.group_guard;
    if (cfg.character_budget) o.character_budget = cfg.character_budget;
    o.threads = std::max(1u, cfg.threads);
    return std::make_unique<BranchingContext>(LeviDatum(RootDatum(*cfg.family, cfg.rank), cfg.levi), o);
  }

  std::optional<std::filesystem::path> cache_dir() const {
    if (cfg.cache_dir) return std::filesystem::path(*cfg.cache_dir);
    if (const char* env = std::getenv("LEVIBRANCH_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

  void load_cache(const BranchingContext& ctx) const {
    if (auto dir = cache_dir()) ctx.pbar().load(partition_cache_path(*dir, ctx.levi()));
  }
  void save_cache(const BranchingContext& ctx) const {
    if (auto dir = cache_dir()) {
      std::error_code ec;
      std::filesystem::create_directories(*dir, ec);
      if (ec) throw IoError("cannot create cache directory " + dir->string() + ": " + ec.message());
      ctx.pbar().save(partition_cache_path(*dir, ctx.levi()));
    }
  }

  Weight need_weight(const std::optional<std::string>& s, const char* name) const {
    if (!s) throw ValidationError(std::string("missing --") + name);
    return parse_weight(*s);
  }

  void write_file(const std::string& path, const std::string& text) const {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) throw IoError("cannot write " + path);
  }

  int branch() const {
    const auto owned = context();
    const auto& ctx = *owned;
    load_cache(ctx);
    int code = kExitOk;
    if (cfg.lambda && cfg.mu) {
      const Weight lam = parse_weight(*cfg.lambda), mu = parse_weight(*cfg.mu);
      const auto m = branch_multiplicity(ctx, lam, mu);
      out << m << "\n";
      if (cfg.oracle) {
        const auto row = branch_by_restriction(ctx, lam);
        const auto it = row.find(mu);
        const std::int64_t o = it == row.end() ? 0 : it->second;
        out << "oracle " << o << (o == m ? " agree" : " MISMATCH") << "\n";
        if (o != m) code = kExitFailure;
      }
    } else if (cfg.mu && cfg.box) {
      const Weight mu = parse_weight(*cfg.mu);
      const auto row = branching_row(ctx, mu, *cfg.box);
      json j{{"mu", weight_to_json(mu)}, {"k", *cfg.box}};
      auto entries = json::array();
      std::string csv = "lambda,m\n";
      auto diff = json::array();
      for (const auto& [lam, m] : row.entries) {
        entries.push_back({{"lambda", weight_to_json(lam)}, {"m", m}});
        csv += "\"" + lam.to_string() + "\"," + std::to_string(m) + "\n";
        if (cfg.oracle) {
          const auto r = branch_by_restriction(ctx, lam);
          const auto it = r.find(mu);
          const std::int64_t o = it == r.end() ? 0 : it->second;
          if (o != m) diff.push_back({{"lambda", weight_to_json(lam)}, {"m", m}, {"oracle", o}});
        }
      }
      j["entries"] = entries;
      if (cfg.oracle) {
        j["oracle_diff"] = diff;
        if (!diff.empty()) code = kExitFailure;
      }
      if (cfg.csv) write_file(*cfg.csv, csv);
      out << j.dump(2) << "\n";
    } else {
      throw ValidationError("branch needs --lambda and --mu, or --mu and --box");
    }
    save_cache(ctx);
    return code;
  }

  int compare() const {
    const auto owned = context();
    const auto& ctx = *owned;
    const auto v = classify_pair(ctx, need_weight(cfg.mu, "mu"), need_weight(cfg.nu, "nu"));
    out << v.to_json().dump(2) << "\n";
    return kExitOk;
  }

  int search() const {
    const auto owned = context();
    const auto& ctx = *owned;
    if (!cfg.bound) throw ValidationError("search needs --bound");
    if (!cfg.certs) throw ValidationError("search needs --certs");
    const auto s = search_to_file(ctx, *cfg.bound, *cfg.certs, std::max(1u, cfg.threads), cfg.resume);
    json j = s.to_json();
    j["system"] = ctx.datum().name();
    j["levi"] = ctx.levi().description();
    j["bound"] = *cfg.bound;
    j["certificates"] = *cfg.certs;
    const std::string text = j.dump(2) + "\n";
    if (cfg.summary) write_file(*cfg.summary, text);
    out << text;
    if (s.counterexamples) err << "note: " << s.counterexamples << " pair(s) without a relating automorphism, see " << *cfg.certs << "\n";
    return kExitOk;
  }

  int autos() const {
    const auto owned = context();
    const auto& ctx = *owned;
    const auto& a = ctx.automorphisms();
    out << json{{"levi", ctx.levi().description()}, {"count", a.size()}, {"elements", weights_json(a)}}.dump(2) << "\n";
    return kExitOk;
  }

  int transversal() const {
    const auto owned = context();
    const auto& ctx = *owned;
    const auto& u = ctx.transversal().elements;
    out << json{{"levi", ctx.levi().description()}, {"count", u.size()}, {"elements", weights_json(u)}}.dump(2) << "\n";
    return kExitOk;
  }

  int mfun() const {
    const auto owned = context();
    const auto& ctx = *owned;
    const Weight mu = need_weight(cfg.mu, "mu");
    const auto M = build_M(ctx, mu);
    auto basis = json::array();
    for (const auto& [lam, a] : M.a) basis.push_back({{"lambda", weight_to_json(lam)}, {"a", a}});
    const auto lt = leading_term(ctx, M);
    out << json{{"mu", weight_to_json(mu)},
                {"m_basis", basis},
                {"leading", {{"Lambda", weight_to_json(lt.Lambda)}, {"m_coefficient", lt.m_coefficient}}},
                {"polynomial", M.expand(ctx.datum()).to_json()}}
               .dump(2)
        << "\n";
    return kExitOk;
  }

  int lr() const {
    if (cfg.polarisation) {
      if (!cfg.family) throw ValidationError("--polarisation needs --system");
      if (!cfg.lambda) throw ValidationError("missing --lambda");
      out << polarisation_branch(*cfg.family, cfg.rank, need_weight(cfg.mu, "mu"), parse_partition(*cfg.lambda)) << "\n";
      return kExitOk;
    }
    if (cfg.csv) {
      if (!cfg.size) throw ValidationError("an LR table export needs --size");
      std::string text = "lambda,mu,nu,c\n";
      for (const auto& lam : partitions_of(*cfg.size))
        for (int k = 0; k <= lam.size(); ++k)
          for (const auto& mu : partitions_inside(lam, k))
            for (const auto& nu : partitions_inside(lam, lam.size() - k)) {
              const auto c = lr_coefficient(lam, mu, nu);
              if (c)
                text += partition_cell(lam) + "," + partition_cell(mu) + "," + partition_cell(nu) + "," +
                        std::to_string(c) + "\n";
            }
      write_file(*cfg.csv, text);
      return kExitOk;
    }
    if (!cfg.lambda) throw ValidationError("missing --lambda");
    const Partition lam = parse_partition(*cfg.lambda);
    if (cfg.factors) {
      std::vector<Partition> f;
      std::string tok;
      std::stringstream ss(*cfg.factors);
      while (std::getline(ss, tok, ';')) f.push_back(parse_partition(tok));
      out << multi_lr(lam, f) << "\n";
      return kExitOk;
    }
    if (!cfg.mu || !cfg.nu) throw ValidationError("lr needs --mu and --nu, --factors, --polarisation or --csv");
    out << lr_coefficient(lam, parse_partition(*cfg.mu), parse_partition(*cfg.nu)) << "\n";
    return kExitOk;
  }

  int verify() const;
};

// ---------------------------------------------------------------- verify

struct Checker {
  std::ostream& out;
  int failed = 0;
  void report(const std::string& name, bool ok, const std::string& detail = {}) {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!ok) ++failed;
  }
};

void verify_system(const BranchingContext& ctx, std::mt19937_64& rng, Checker& c) {
  const auto& g = ctx.datum();
  const auto& l = ctx.levi();
  const std::string tag = " [" + g.name() + " > " + l.description() + "]";
  const auto box = levi_box(l, 2);

  std::string detail;
  bool ok = true;
  for (const auto& lam : box) {
    if (!is_dominant(lam, g)) continue;
    const auto row = branch_by_restriction(ctx, lam);
    for (const auto& mu : box) {
      const auto it = row.find(mu);
      const std::int64_t want = it == row.end() ? 0 : it->second;
      const auto got = branch_multiplicity(ctx, lam, mu);
      if (got != want && ok) {
        ok = false;
        detail = "lambda " + lam.to_string() + " mu " + mu.to_string();
      }
    }
  }
  c.report("branching formula equals restriction" + tag, ok, detail);

  const auto& u = ctx.transversal().elements;
  ok = u.size() * ctx.levi_group().size() == ctx.group().size();
  for (const auto& x : u)
    for (const auto& a : l.positive_roots()) ok = ok && g.is_positive_root(x.act(a));
  c.report("transversal is a set of coset representatives" + tag, ok);

  ok = true;
  detail.clear();
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int t = 0; t < 10 && !box.empty(); ++t) {
    const Weight mu = box[pick(rng)];
    const auto M = build_M(ctx, mu);  // cross-checked against the transversal form
    for (const auto& a : ctx.automorphisms())
      if (!(build_M(ctx, a.act(mu)) == M)) {
        ok = false;
        detail = "mu " + mu.to_string();
      }
    const auto lt = leading_term(ctx, M);
    if (lt.m_coefficient != l.longest_sign() || !lt.others_below) {
      ok = false;
      detail = "leading term of mu " + mu.to_string();
    }
  }
  c.report("M functions: automorphism invariance and leading term" + tag, ok, detail);
}

int Job::verify() const {
  Checker c{out};
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::unique_ptr<BranchingContext>> systems;
  if (cfg.family) {
    systems.push_back(context());
  } else {
    for (auto [f, n, sbar] : std::vector<std::tuple<Family, int, std::vector<int>>>{
             {Family::GL, 4, {1, 3}}, {Family::B, 3, {1, 3}}, {Family::C, 3, {1, 2}}, {Family::D, 4, {1, 2, 3}}})
      systems.push_back(std::make_unique<BranchingContext>(LeviDatum(RootDatum(f, n), sbar)));
  }
  for (const auto& ctx : systems) verify_system(*ctx, rng, c);

  bool ok = true;
  for (int n = 0; n <= 6; ++n) {
    const auto& k = kostka_matrix(n);
    for (std::size_t i = 0; i < k.index.size(); ++i)
      for (std::size_t j = 0; j < k.index.size(); ++j) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < k.index.size(); ++t) s += k.K[i][t] * k.Kinv[t][j];
        ok = ok && s == (i == j ? 1 : 0);
      }
  }
  c.report("Kostka matrix times its inverse is the identity", ok);

  ok = true;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng() % 8) + 1;
    const auto parts = partitions_of(n);
    const auto& lam = parts[rng() % parts.size()];
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    const auto inner = partitions_inside(lam, k);
    const auto outer = partitions_of(n - k);
    if (inner.empty()) continue;
    const auto& mu = inner[rng() % inner.size()];
    const auto& nu = outer[rng() % outer.size()];
    ok = ok && lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu);
  }
  c.report("LR coefficients are symmetric", ok);

  ok = true;
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::C, 2}, {Family::C, 3}}) {
    std::vector<int> sbar;
    for (int i = 1; i < n; ++i) sbar.push_back(i);
    BranchingContext ctx(LeviDatum(RootDatum(f, n), sbar));
    for (int size = 0; size <= n; ++size)
      for (const auto& lam : partitions_of(size, static_cast<std::size_t>(n)))
        for (const auto& [mu, m] : branch_by_restriction(ctx, lam.to_weight(static_cast<std::size_t>(n))))
          if (mu.is_integral()) ok = ok && polarisation_branch(f, n, mu, lam) == m;
  }
  c.report("Littlewood formulas agree with restriction for |lambda| <= n", ok);

  out << (c.failed ? "verify: " + std::to_string(c.failed) + " check(s) failed" : std::string("verify: all checks passed"))
      << "\n";
  return c.failed ? kExitFailure : kExitOk;
}

}  // namespace

void apply_system(JobConfig& cfg, const json& d) {
  if (d.is_string()) {
    const auto s = d.get<std::string>();
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ValidationError("system '" + s + "' is not of the form FAMILY:RANK");
    cfg.family = parse_family(s.substr(0, colon));
    const auto r = parse_index_list(s.substr(colon + 1));
    if (r.size() != 1) throw ValidationError("system '" + s + "' has no single rank");
    cfg.rank = r[0];
    return;
  }
  if (!d.is_object()) throw ValidationError("'system' must be a string or an object");
  for (const auto& [k, v] : d.items())
    if (k != "family" && k != "rank" && k != "levi") throw ValidationError("unknown key 'system." + k + "'");
  if (!d.contains("family") || !d.contains("rank")) throw ValidationError("'system' needs 'family' and 'rank'");
  if (!d["family"].is_string()) throw ValidationError("'system.family' must be a string");
  cfg.family = parse_family(d["family"].get<std::string>());
  cfg.rank = number_of<int>(d["rank"], "system.rank");
  if (d.contains("levi")) cfg.levi = parse_index_list(text_of(d["levi"], "system.levi"));
}

JobConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  JobConfig c;
  for (const auto& [k, v] : j.items()) {
    if (k == "system") apply_system(c, v);
    else if (k == "levi") c.levi = parse_index_list(text_of(v, "levi"));
    else if (k == "threads") c.threads = number_of<unsigned>(v, "threads");
    else if (k == "cache_dir") c.cache_dir = text_of(v, "cache_dir");
    else if (k == "group_guard") c.group_guard = number_of<std::uint64_t>(v, "group_guard");
    else if (k == "character_budget") c.character_budget = number_of<std::uint64_t>(v, "character_budget");
    else if (k == "seed") c.seed = number_of<std::uint64_t>(v, "seed");
    else if (k == "lambda") c.lambda = text_of(v, "lambda");
    else if (k == "mu") c.mu = text_of(v, "mu");
    else if (k == "nu") c.nu = text_of(v, "nu");
    else if (k == "box") c.box = number_of<int>(v, "box");
    else if (k == "bound") c.bound = number_of<int>(v, "bound");
    else if (k == "size") c.size = number_of<int>(v, "size");
    else if (k == "certs") c.certs = text_of(v, "certs");
    else if (k == "summary") c.summary = text_of(v, "summary");
    else if (k == "csv") c.csv = text_of(v, "csv");
    else if (k == "factors") c.factors = text_of(v, "factors");
    else if (k == "resume") c.resume = bool_of(v, "resume");
    else if (k == "oracle") c.oracle = bool_of(v, "oracle");
    else if (k == "polarisation") c.polarisation = bool_of(v, "polarisation");
    else throw ValidationError("unknown config key '" + k + "'");
  }
  return c;
}

std::filesystem::path partition_cache_path(const std::filesystem::path& dir, const LeviDatum& levi) {
  std::string key = family_name(levi.parent().family()) + ":" + std::to_string(levi.parent().rank()) + ":";
  for (int i : levi.sbar()) key += std::to_string(i) + ",";
  std::ostringstream name;
  name << "pbar-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".txt";
  return dir / name.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching coefficients and induced characters for Levi subalgebras of classical Lie algebras"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Flags {
    std::optional<std::string> config, system, levi, cache_dir, lambda, mu, nu, certs, summary, csv, factors;
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> group_guard, budget, seed;
    std::optional<int> box, bound, size;
    bool resume = false, oracle = false, polarisation = false;
  } f;

  auto common = [&](CLI::App* s) {
    s->add_option("--config", f.config, "JSON config file; flags override its keys");
    s->add_option("--system", f.system, "root system, e.g. C:6 or gl:4");
    s->add_option("--levi", f.levi, "retained simple roots, 1-based, e.g. 1,2,4,5,6");
    s->add_option("--threads", f.threads, "worker threads");
    s->add_option("--cache-dir", f.cache_dir, "partition function cache (default: $LEVIBRANCH_CACHE_DIR)");
    s->add_option("--group-guard", f.group_guard, "largest Weyl group to enumerate");
    s->add_option("--budget", f.budget, "largest module dimension for characters");
    s->add_option("--seed", f.seed, "seed for randomized checks");
  };
  auto* branch = app.add_subcommand("branch", "branching coefficient m_mu^lambda, or a row of them");
  auto* compare = app.add_subcommand("compare", "decide H_mu = H_nu and classify the pair");
  auto* search = app.add_subcommand("search", "scan a box of Levi-dominant weights for equal induced characters");
  auto* autos = app.add_subcommand("autos", "diagram automorphisms of the Levi lying in W");
  auto* u = app.add_subcommand("u", "minimal coset representatives of W / W-bar");
  auto* mfun = app.add_subcommand("mfun", "the M function of mu");
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients and Littlewood branching");
  auto* verify = app.add_subcommand("verify", "run the invariant checks");
  for (auto* s : {branch, compare, search, autos, u, mfun, lr, verify}) common(s);
  for (auto* s : {branch, lr}) s->add_option("--lambda", f.lambda, "weight or partition lambda");
  for (auto* s : {branch, compare, mfun, lr}) s->add_option("--mu", f.mu, "weight or partition mu");
  for (auto* s : {compare, lr}) s->add_option("--nu", f.nu, "weight or partition nu");
  branch->add_option("--box", f.box, "row of lambda with mu <= lambda <= mu + k theta");
  branch->add_flag("--oracle", f.oracle, "cross-check against restriction of the character");
  for (auto* s : {branch, lr}) s->add_option("--csv", f.csv, "CSV export path");
  search->add_option("--bound", f.bound, "coordinate bound of the box");
  search->add_option("--certs", f.certs, "JSONL certificate file");
  search->add_option("--summary", f.summary, "also write the summary JSON here");
  search->add_flag("--resume", f.resume, "continue from <certs>.ckpt");
  lr->add_option("--factors", f.factors, "iterated product, e.g. '1;1;1' or '2,1;1'");
  lr->add_option("--size", f.size, "partition size for --csv tables");
  lr->add_flag("--polarisation", f.polarisation, "Littlewood branching for B, C, D over gl_n (needs --system)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    JobConfig cfg;
    if (f.config) {
      std::ifstream in(*f.config);
      if (!in) throw IoError("cannot read config " + *f.config);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw ValidationError("config " + *f.config + " is not valid JSON: " + e.what());
      }
      cfg = config_from_json(j);
    }
    if (f.system) apply_system(cfg, json(*f.system));
    if (f.levi) cfg.levi = parse_index_list(*f.levi);
    if (f.threads) cfg.threads = *f.threads;
    if (f.cache_dir) cfg.cache_dir = f.cache_dir;
    if (f.group_guard) cfg.group_guard = *f.group_guard;
    if (f.budget) cfg.character_budget = *f.budget;
    if (f.seed) cfg.seed = *f.seed;
    for (auto [dst, src] : {std::pair{&cfg.lambda, &f.lambda}, {&cfg.mu, &f.mu}, {&cfg.nu, &f.nu}, {&cfg.certs, &f.certs},
                            {&cfg.summary, &f.summary}, {&cfg.csv, &f.csv}, {&cfg.factors, &f.factors}})
      if (*src) *dst = *src;
    if (f.box) cfg.box = f.box;
    if (f.bound) cfg.bound = f.bound;
    if (f.size) cfg.size = f.size;
    cfg.resume = cfg.resume || f.resume;
    cfg.oracle = cfg.oracle || f.oracle;
    cfg.polarisation = cfg.polarisation || f.polarisation;

    Job job{cfg, out, err};
    if (branch->parsed()) return job.branch();
    if (compare->parsed()) return job.compare();
    if (search->parsed()) return job.search();
    if (autos->parsed()) return job.autos();
    if (u->parsed()) return job.transversal();
    if (mfun->parsed()) return job.mfun();
    if (lr->parsed()) return job.lr();
    return job.verify();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const GroupSizeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace lvb
