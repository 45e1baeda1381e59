#include <doctest.h>

#include <filesystem>
#include <random>

#include "levibranch/errors.hpp"
#include "levibranch/weightpoly.hpp"
#include "oracles.hpp"

using namespace lvb;

namespace {

std::vector<Weight> dominant_box(const RootDatum& g, int bound) {
  std::vector<Weight> out;
  const int lo = g.family() == Family::GL ? -bound : 0;
  std::vector<int> c(g.dim(), lo);
  while (true) {
    const Weight w = Weight::from_integers(c);
    if (is_dominant(w, g)) out.push_back(w);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = lo;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("weightpoly") {
  TEST_CASE("polynomial arithmetic") {
    WeightPolynomial p;
    p.add(Weight{1, 0}, 2);
    p.add(Weight{0, 1}, -1);
    p.add(Weight{1, 0}, -2);
    CHECK(p.size() == 1);
    CHECK(p.coefficient(Weight{1, 0}) == 0);
    std::mt19937 rng(1);
    auto rnd = [&] {
      WeightPolynomial q;
      for (int i = 0; i < 6; ++i)
        q.add(Weight{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2},
              static_cast<int>(rng() % 7) - 3);
      return q;
    };
    for (int t = 0; t < 50; ++t) {
      const auto a = rnd(), b = rnd(), c = rnd();
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(WeightPolynomial::from_json(a.to_json()) == a);
      CHECK((a - a).empty());
    }
    const auto half = WeightPolynomial::monomial(Weight::from_doubled({1, -3}), 5);
    CHECK(half.to_json().dump() == R"([{"c":5,"w":[0.5,-1.5]}])");
    CHECK(WeightPolynomial::from_json(half.to_json()) == half);
  }

  TEST_CASE("partition function examples") {
    LeviDatum l(RootDatum(Family::GL, 3), {1});
    auto t = PartitionTable::for_levi(l);
    CHECK(t->roots().size() == 2);
    CHECK(t->count(Weight(3)) == 1);
    CHECK(t->count(Weight{1, 1, -2}) == 1);
    CHECK(t->count(Weight{1, -1, 0}) == 0);
    CHECK(t->count(Weight{-1, 0, 1}) == 0);
  }

  TEST_CASE("partition function against brute force") {
    std::mt19937 rng(2);
    for (auto [f, n, sbar] : std::vector<std::tuple<Family, int, std::vector<int>>>{
             {Family::C, 3, {}}, {Family::B, 3, {1, 3}}, {Family::D, 4, {1, 2, 3}}, {Family::GL, 4, {1, 3}},
             {Family::C, 3, {1, 2}}}) {
      RootDatum g(f, n);
      LeviDatum l(g, sbar);
      auto t = PartitionTable::for_levi(l);
      for (int k = 0; k < 60; ++k) {
        Weight beta(g.dim());
        for (const auto& a : g.positive_roots())
          if (rng() % 3 == 0) beta += static_cast<std::int64_t>(rng() % 2 + 1) * a;
        if (k % 4 == 0) beta -= g.simple_roots()[rng() % g.simple_roots().size()];
        CHECK(t->count(beta) == oracle::partitions(t->roots(), beta, g.rho()));
      }
    }
  }

  TEST_CASE("partition table persistence") {
    LeviDatum l(RootDatum(Family::C, 3), {1, 2});
    auto t = PartitionTable::for_levi(l);
    const Weight beta{3, 1, 0};
    const auto v = t->count(beta);
    const auto path = std::filesystem::temp_directory_path() / "lvb_ptable_test.txt";
    t->save(path);
    auto u = PartitionTable::for_levi(l);
    CHECK(u->load(path));
    CHECK(u->cached() == t->cached());
    CHECK(u->count(beta) == v);
    auto other = PartitionTable::for_levi(LeviDatum(RootDatum(Family::C, 3), {1}));
    CHECK_THROWS_AS(other->load(path), IoError);
    std::filesystem::remove(path);
    CHECK_FALSE(u->load(path));
  }

  TEST_CASE("characters") {
    RootDatum c2(Family::C, 2);
    CHECK(weyl_character(c2, Weight{0, 0}) == WeightPolynomial::monomial(Weight{0, 0}));
    const auto v = weyl_character(c2, Weight{1, 0});
    CHECK(v.size() == 4);
    for (const auto& w : {Weight{1, 0}, Weight{-1, 0}, Weight{0, 1}, Weight{0, -1}}) CHECK(v.coefficient(w) == 1);
    RootDatum c3(Family::C, 3);
    CHECK(weyl_dimension(c3.subsystem(), Weight{1, 1, 0}) == 14);
    std::int64_t total = 0;
    const auto chi = weyl_character(c3, Weight{1, 1, 0});
    for (const auto& [w, m] : chi.terms()) total += m;
    CHECK(total == 14);
    CHECK(weyl_dimension(RootDatum(Family::B, 2).subsystem(), Weight::from_doubled({1, 1})) == 4);
    CHECK_THROWS_AS(weyl_character(c3, Weight{5, 5, 5}, 1000), BudgetError);
    CHECK_THROWS_AS(weyl_character(c3, Weight{0, 1, 0}), ValidationError);
  }

  TEST_CASE("Freudenthal agrees with Kostant and characters are W-symmetric") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::GL, 3}, {Family::B, 2}, {Family::C, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
      RootDatum g(f, n);
      auto table = PartitionTable::for_datum(g);
      const auto group = enumerate_group(g);
      for (const auto& lam : dominant_box(g, 2)) {
        const auto chi = weyl_character(g, lam);
        std::int64_t dim = 0;
        for (const auto& [w, m] : chi.terms()) {
          dim += m;
          CHECK(m == kostka_multiplicity(g, *table, lam, w, group));
        }
        CHECK(static_cast<std::uint64_t>(dim) == weyl_dimension(g.subsystem(), lam));
        for (const auto& w : group) CHECK(chi.act(w) == chi);
        // weights just outside the support
        for (const auto& [w, m] : chi.terms())
          for (const auto& a : g.simple_roots())
            if (chi.coefficient(w + a) == 0) CHECK(kostka_multiplicity(g, *table, lam, w + a, group) == 0);
      }
    }
    RootDatum b2(Family::B, 2);
    const auto spin = weyl_character(b2, Weight::from_doubled({1, 1}));
    CHECK(spin.size() == 4);
  }

  TEST_CASE("Kostka numbers") {
    RootDatum gl3(Family::GL, 3);
    CHECK(kostka_multiplicity(gl3, Weight{2, 1, 0}, Weight{1, 1, 1}) == 2);
    CHECK(kostka_multiplicity(gl3, Weight{2, 1, 0}, Weight{2, 1, 0}) == 1);
    CHECK(kostka_multiplicity(gl3, Weight{2, 1, 0}, Weight{3, 0, 0}) == 0);
    RootDatum gl4(Family::GL, 4);
    const auto chi = weyl_character(gl4, Weight{3, 2, 1, 0});
    for (const auto& [w, m] : chi.terms()) {
      const Weight d = dominant_weight(gl4, w);
      std::vector<int> mu;
      for (std::size_t i = 0; i < 4; ++i) mu.push_back(d.integer_coord(i));
      CHECK(m == oracle::ssyt_count({3, 2, 1}, mu));
    }
  }

  TEST_CASE("symmetrize") {
    RootDatum gl3(Family::GL, 3);
    CHECK(symmetrize(gl3, Weight(3)) == WeightPolynomial::monomial(Weight(3), 6));
    const auto m = symmetrize(gl3, Weight{1, 0, 0});
    CHECK(m.size() == 3);
    for (const auto& w : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}}) CHECK(m.coefficient(w) == 2);
    const auto r = symmetrize(gl3, Weight{2, 1, 0});
    CHECK(r.size() == 6);
    for (const auto& [w, c] : r.terms()) CHECK(c == 1);
    RootDatum c3(Family::C, 3);
    const auto group = enumerate_group(c3);
    for (const auto& gam : {Weight{2, 0, -1}, Weight{1, 1, 0}, Weight{0, 0, 0}, Weight{3, -2, 1}}) {
      WeightPolynomial literal;
      for (const auto& w : group) literal.add(w.act(gam), 1);
      CHECK(symmetrize(c3, gam) == literal);
      CHECK(symmetrize(c3, group[17].act(gam)) == literal);
    }
    CHECK_THROWS_AS(symmetrize(c3, Weight{1, 0, 0}, 10), GroupSizeError);
  }

  TEST_CASE("alternating sums and nabla") {
    LeviDatum none(RootDatum(Family::C, 3), {});
    CHECK(alternating_sum(none, Weight{1, 2, 3}) == WeightPolynomial::monomial(Weight{1, 2, 3}));
    LeviDatum gl2(RootDatum(Family::GL, 3), {1});
    CHECK(alternating_sum(gl2, Weight{1, 1, 0}).empty());
    const auto a = alternating_sum(gl2, gl2.rho_bar());
    CHECK(a.size() == 2);
    CHECK(a.coefficient(gl2.rho_bar()) == 1);
    CHECK(a.coefficient(-gl2.rho_bar()) == -1);
    LeviDatum sp(RootDatum(Family::C, 3), {1, 2});
    const auto wb = levi_weyl_group(sp);
    for (const auto& w : wb) CHECK(alternating_sum(wb, w.act(Weight{3, 1, 0})) == alternating_sum(wb, Weight{3, 1, 0}).scaled(w.sign()));

    CHECK(nabla_bar(none) == WeightPolynomial::monomial(Weight(3)));
    auto one_minus = WeightPolynomial::monomial(Weight(3));
    one_minus.add(Weight{1, -1, 0}, -1);
    CHECK(nabla_bar(gl2) == one_minus);
    const auto big = nabla_bar(LeviDatum(RootDatum(Family::C, 6), {1, 2, 4, 5, 6}));
    CHECK(big.size() == 288);
    CHECK(big.coefficient(Weight(6)) == 1);
    for (Family f : {Family::GL, Family::B, Family::C, Family::D}) {
      RootDatum g(f, 4);
      const int s = static_cast<int>(g.simple_roots().size());
      for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> sbar;
        for (int i = 0; i < s; ++i)
          if (mask & (1u << i)) sbar.push_back(i + 1);
        CHECK_NOTHROW(nabla_bar(LeviDatum(g, sbar)));
      }
    }
  }
}
