#include "levibranch/weightpoly.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "levibranch/errors.hpp"

namespace lvb {

using nlohmann::json;

// ------------------------------------------------------ WeightPolynomial

WeightPolynomial WeightPolynomial::monomial(const Weight& w, std::int64_t c) {
  WeightPolynomial p;
  p.add(w, c);
  return p;
}

void WeightPolynomial::add(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t WeightPolynomial::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, checked_mul(-1, c));
  return *this;
}

WeightPolynomial WeightPolynomial::operator*(const WeightPolynomial& o) const {
  // Translation preserves the lexicographic order, so each shifted copy of
  // `o` is already a sorted run; a stable sort merges the runs.
  std::vector<std::pair<Weight, std::int64_t>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) prod.emplace_back(a + b, checked_mul(ca, cb));
  std::stable_sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  WeightPolynomial r;
  auto hint = r.terms_.end();
  for (std::size_t i = 0; i < prod.size();) {
    std::int64_t c = 0;
    std::size_t j = i;
    for (; j < prod.size() && prod[j].first == prod[i].first; ++j) c = checked_add(c, prod[j].second);
    if (c != 0) hint = r.terms_.emplace_hint(hint, prod[i].first, c);
    i = j;
  }
  return r;
}

WeightPolynomial WeightPolynomial::scaled(std::int64_t k) const {
  WeightPolynomial r;
  if (k == 0) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, checked_mul(k, c));
  return r;
}

WeightPolynomial WeightPolynomial::act(const WeylElement& w) const {
  WeightPolynomial r;
  for (const auto& [x, c] : terms_) r.add(w.act(x), c);
  return r;
}

json weight_to_json(const Weight& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const int d = w.doubled(i);
    if (d % 2 == 0)
      a.push_back(d / 2);
    else
      a.push_back(d / 2.0);
  }
  return a;
}

Weight weight_from_json(const json& j) {
  if (j.is_string()) return parse_weight(j.get<std::string>());
  if (!j.is_array()) throw ValidationError("weight must be a JSON array of coordinates");
  if (j.size() > kMaxRank) throw ValidationError("weight has too many coordinates");
  std::vector<int> d;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      d.push_back(static_cast<int>(checked_mul(2, x.get<std::int64_t>())));
    } else if (x.is_number_float()) {
      const double v = 2 * x.get<double>();
      if (v != static_cast<double>(static_cast<long long>(v)))
        throw ValidationError("weight coordinate must be an integer or half-integer");
      d.push_back(static_cast<int>(v));
    } else if (x.is_string()) {
      d.push_back(parse_weight(x.get<std::string>()).doubled(0));
    } else {
      throw ValidationError("weight coordinate must be a number");
    }
  }
  return Weight::from_doubled(d);
}

json WeightPolynomial::to_json() const {
  json a = json::array();
  for (const auto& [w, c] : terms_) a.push_back({{"w", weight_to_json(w)}, {"c", c}});
  return a;
}

WeightPolynomial WeightPolynomial::from_json(const json& j) {
  WeightPolynomial p;
  for (const auto& t : j) p.add(weight_from_json(t.at("w")), t.at("c").get<std::int64_t>());
  return p;
}

// -------------------------------------------------------- PartitionTable

std::shared_ptr<PartitionTable> PartitionTable::for_datum(const RootDatum& datum) {
  return std::make_shared<PartitionTable>(
      datum, std::vector<Weight>(datum.positive_roots().begin(), datum.positive_roots().end()));
}

std::shared_ptr<PartitionTable> PartitionTable::for_levi(const LeviDatum& levi) {
  std::vector<Weight> roots;
  for (const auto& a : levi.parent().positive_roots())
    if (!levi.contains_root(a)) roots.push_back(a);
  return std::make_shared<PartitionTable>(levi.parent(), std::move(roots));
}

namespace {

template <class Coords>
Coords to_coords(const std::vector<std::int64_t>& v) {
  Coords c{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > INT16_MAX || v[i] < INT16_MIN) throw BudgetError("partition function argument too large");
    c[i] = static_cast<std::int16_t>(v[i]);
  }
  return c;
}

}  // namespace

PartitionTable::PartitionTable(const RootDatum& datum, std::vector<Weight> roots)
    : rank_(datum.simple_roots().size()), roots_(std::move(roots)), cone_(datum.cone()) {
  for (const auto& r : roots_) {
    auto co = cone_.coordinates(r);
    if (!co) throw std::invalid_argument("partition table root outside the root lattice");
    for (auto x : *co)
      if (x < 0) throw std::invalid_argument("partition table root is not positive");
    root_coords_.push_back(to_coords<Coords>(*co));
  }
  suffix_support_.assign(roots_.size() + 1, 0);
  for (std::size_t k = roots_.size(); k-- > 0;) {
    std::uint32_t m = suffix_support_[k + 1];
    for (std::size_t i = 0; i < rank_; ++i)
      if (root_coords_[k][i] != 0) m |= 1u << i;
    suffix_support_[k] = m;
  }
}

std::size_t PartitionTable::KeyHash::operator()(const std::pair<std::uint32_t, Coords>& k) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ k.first;
  for (auto x : k.second) {
    h ^= static_cast<std::uint16_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t PartitionTable::eval(std::uint32_t k, const Coords& c) const {
  std::uint32_t nonzero = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (c[i] < 0) return 0;
    if (c[i] != 0) nonzero |= 1u << i;
  }
  if (nonzero == 0) return 1;
  if (k == roots_.size() || (nonzero & ~suffix_support_[k]) != 0) return 0;
  const auto key = std::make_pair(k, c);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::uint64_t v = eval(k + 1, c);
  Coords d = c;
  bool ok = true;
  for (std::size_t i = 0; i < rank_; ++i) {
    d[i] = static_cast<std::int16_t>(c[i] - root_coords_[k][i]);
    if (d[i] < 0) ok = false;
  }
  if (ok) v = checked_add(v, eval(k, d));
  memo_.emplace(key, v);
  return v;
}

std::uint64_t PartitionTable::count(const Weight& beta) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = top_.find(beta); it != top_.end()) return it->second;
  }
  std::uint64_t v = 0;
  auto co = cone_.coordinates(beta);
  bool possible = co.has_value();
  if (possible)
    for (auto x : *co)
      if (x < 0) possible = false;
  std::unique_lock lock(mutex_);
  if (auto it = top_.find(beta); it != top_.end()) return it->second;
  if (possible) v = eval(0, to_coords<Coords>(*co));
  top_.emplace(beta, v);
  return v;
}

std::size_t PartitionTable::cached() const {
  std::shared_lock lock(mutex_);
  return top_.size();
}

std::string PartitionTable::header() const {
  std::ostringstream h;
  h << "levibranch-partition-table 1 rank " << rank_ << " roots " << roots_.size();
  for (const auto& r : roots_) h << " " << r.to_string();
  return h.str();
}

void PartitionTable::save(const std::filesystem::path& path) const {
  std::vector<std::pair<Weight, std::uint64_t>> rows;
  {
    std::shared_lock lock(mutex_);
    rows.assign(top_.begin(), top_.end());
  }
  std::sort(rows.begin(), rows.end());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out << header() << "\n";
    for (const auto& [w, v] : rows) {
      out << w.dim();
      for (std::size_t i = 0; i < w.dim(); ++i) out << " " << w.doubled(i);
      out << " " << v << "\n";
    }
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp + ": " + ec.message());
}

bool PartitionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != header()) throw IoError("partition table header mismatch in " + path.string());
  std::vector<std::pair<Weight, std::uint64_t>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::size_t dim = 0;
    if (!(ls >> dim) || dim > kMaxRank) throw IoError("malformed partition table row in " + path.string());
    std::vector<int> d(dim);
    for (auto& x : d)
      if (!(ls >> x)) throw IoError("malformed partition table row in " + path.string());
    std::uint64_t v = 0;
    if (!(ls >> v)) throw IoError("malformed partition table row in " + path.string());
    rows.emplace_back(Weight::from_doubled(d), v);
  }
  std::unique_lock lock(mutex_);
  for (auto& [w, v] : rows) top_.emplace(w, v);
  return true;
}

// ------------------------------------------------------------ characters

std::uint64_t weyl_dimension(const RootSubsystem& sys, const Weight& lambda) {
  using boost::multiprecision::cpp_rational;
  cpp_rational d = 1;
  const Weight lr = lambda + sys.rho();
  for (const auto& a : sys.positive_roots()) d *= cpp_rational(dot4(lr, a), dot4(sys.rho(), a));
  if (denominator(d) != 1 || d < 0) throw std::logic_error("Weyl dimension is not a natural number");
  const auto n = numerator(d);
  if (n > std::numeric_limits<std::uint64_t>::max()) throw BudgetError("module dimension overflows 64 bits");
  return static_cast<std::uint64_t>(n);
}

WeightPolynomial weyl_character(const RootSubsystem& sys, const Weight& lambda, std::uint64_t budget) {
  if (!sys.is_dominant(lambda)) throw ValidationError("highest weight " + lambda.to_string() + " is not dominant");
  const std::uint64_t dim = weyl_dimension(sys, lambda);
  if (dim > budget)
    throw BudgetError("module of dimension " + std::to_string(dim) + " exceeds the character budget " +
                      std::to_string(budget));
  const Weight& rho = sys.rho();
  const std::int64_t top = dot4(lambda + rho, lambda + rho);
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult.emplace(lambda, 1);
  std::vector<Weight> layer{lambda};
  while (!layer.empty()) {
    std::set<Weight> cand;
    for (const auto& mu : layer)
      for (const auto& a : sys.simple_roots()) cand.insert(mu - a);
    std::vector<Weight> next;
    for (const auto& mu : cand) {
      const std::int64_t den = top - dot4(mu + rho, mu + rho);
      if (den <= 0) continue;
      std::int64_t num = 0;
      for (const auto& a : sys.positive_roots()) {
        Weight x = mu + a;
        for (auto it = mult.find(x); it != mult.end(); it = mult.find(x)) {
          num = checked_add(num, checked_mul(2 * it->second, dot4(x, a)));
          x += a;
        }
      }
      if (num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
      if (num / den > 0) {
        mult.emplace(mu, num / den);
        next.push_back(mu);
      }
    }
    layer = std::move(next);
  }
  WeightPolynomial p;
  for (const auto& [w, m] : mult) p.add(w, m);
  return p;
}

WeightPolynomial weyl_character(const RootDatum& datum, const Weight& lambda, std::uint64_t budget) {
  return weyl_character(datum.subsystem(), lambda, budget);
}

std::int64_t kostka_multiplicity(const RootDatum& datum, const PartitionTable& full, const Weight& lambda,
                                 const Weight& beta, std::span<const WeylElement> group) {
  const Weight lr = lambda + datum.rho();
  const Weight br = beta + datum.rho();
  std::int64_t s = 0;
  for (const auto& w : group) {
    const auto p = full.count(w.act(lr) - br);
    if (p != 0) s = checked_add(s, w.sign() * static_cast<std::int64_t>(p));
  }
  return s;
}

std::int64_t kostka_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& beta) {
  auto table = PartitionTable::for_datum(datum);
  const auto group = enumerate_group(datum);
  return kostka_multiplicity(datum, *table, lambda, beta, group);
}

WeightPolynomial symmetrize(const RootDatum& datum, const Weight& gamma, std::uint64_t guard) {
  check_group_guard(datum, guard);
  const auto stab = static_cast<std::int64_t>(stabilizer_order(datum, dominant_weight(datum, gamma)));
  WeightPolynomial p;
  for (const auto& x : datum.subsystem().orbit(gamma)) p.add(x, stab);
  return p;
}

WeightPolynomial alternating_sum(std::span<const WeylElement> levi_group, const Weight& gamma) {
  WeightPolynomial p;
  for (const auto& w : levi_group) p.add(w.act(gamma), w.sign());
  return p;
}

WeightPolynomial alternating_sum(const LeviDatum& levi, const Weight& gamma) {
  return alternating_sum(levi_weyl_group(levi), gamma);
}

WeightPolynomial nabla_bar(const LeviDatum& levi) {
  const std::size_t n = levi.parent().dim();
  WeightPolynomial prod = WeightPolynomial::monomial(Weight(n));
  for (const auto& a : levi.positive_roots()) {
    WeightPolynomial f = WeightPolynomial::monomial(Weight(n));
    f.add(a, -1);
    prod = prod * f;
  }
  WeightPolynomial alt;
  for (const auto& w : levi_weyl_group(levi)) alt.add(levi.rho_bar() - w.act(levi.rho_bar()), w.sign());
  if (!(alt == prod)) throw std::logic_error("product and alternating forms of nabla_bar disagree");
  return prod;
}

}  // namespace lvb
