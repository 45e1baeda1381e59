#include <doctest.h>

#include <random>
#include <set>

#include "levibranch/errors.hpp"
#include "levibranch/rootsys.hpp"

using namespace lvb;

namespace {

std::vector<Weight> small_box(std::size_t dim, int bound) {
  std::vector<Weight> out;
  std::vector<int> c(dim, -bound);
  while (true) {
    out.push_back(Weight::from_integers(c));
    std::size_t i = 0;
    while (i < dim && c[i] == bound) c[i++] = -bound;
    if (i == dim) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("positive root counts and rho") {
    for (int n = 1; n <= 6; ++n) {
      RootDatum gl(Family::GL, n), b(Family::B, n), c(Family::C, n);
      CHECK(gl.positive_roots().size() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(b.positive_roots().size() == static_cast<std::size_t>(n * n));
      CHECK(c.positive_roots().size() == static_cast<std::size_t>(n * n));
      if (n >= 2) {
        RootDatum d(Family::D, n);
        CHECK(d.positive_roots().size() == static_cast<std::size_t>(n * (n - 1)));
      }
      for (const RootDatum* r : {&gl, &b, &c}) {
        Weight sum(static_cast<std::size_t>(n));
        for (const auto& a : r->positive_roots()) {
          sum += a;
          CHECK(r->cone().contains(a));
        }
        CHECK(sum == 2 * r->rho());
      }
    }
  }

  TEST_CASE("examples") {
    RootDatum c6(Family::C, 6);
    CHECK(c6.positive_roots().size() == 36);
    RootDatum gl3(Family::GL, 3);
    std::set<Weight> pos(gl3.positive_roots().begin(), gl3.positive_roots().end());
    CHECK(pos == std::set<Weight>{Weight{1, -1, 0}, Weight{1, 0, -1}, Weight{0, 1, -1}});
    CHECK(gl3.rho() == Weight{1, 0, -1});
    CHECK(RootDatum(Family::C, 3).rho() == Weight{3, 2, 1});
    CHECK(RootDatum(Family::B, 2).rho() == Weight::from_doubled({3, 1}));
    CHECK_THROWS_AS(RootDatum(Family::D, 1), ValidationError);
    CHECK_THROWS_AS(RootDatum(Family::C, 0), ValidationError);
  }

  TEST_CASE("sp12 Levi gl3 + sp6") {
    LeviDatum l(RootDatum(Family::C, 6), {1, 2, 4, 5, 6});
    CHECK(l.description() == "gl3+sp6");
    CHECK(l.positive_roots().size() == 12);
    CHECK(l.rho_bar() == Weight{1, 0, -1, 3, 2, 1});
    std::set<Weight> expect{Weight{1, -1, 0, 0, 0, 0}, Weight{1, 0, -1, 0, 0, 0}, Weight{0, 1, -1, 0, 0, 0}};
    for (int i = 3; i < 6; ++i) {
      expect.insert(2 * Weight::unit(6, static_cast<std::size_t>(i)));
      for (int j = i + 1; j < 6; ++j) {
        expect.insert(Weight::unit(6, static_cast<std::size_t>(i)) - Weight::unit(6, static_cast<std::size_t>(j)));
        expect.insert(Weight::unit(6, static_cast<std::size_t>(i)) + Weight::unit(6, static_cast<std::size_t>(j)));
      }
    }
    CHECK(std::set<Weight>(l.positive_roots().begin(), l.positive_roots().end()) == expect);
  }

  TEST_CASE("gl6 Levi gl4 + gl2") {
    LeviDatum l(RootDatum(Family::GL, 6), {1, 2, 3, 5});
    CHECK(l.description() == "gl4+gl2");
    CHECK(2 * l.rho_bar() == Weight{3, 1, -1, -3, 1, -1});
    CHECK(l.longest_sign() == -1);
  }

  TEST_CASE("Levi components") {
    CHECK(LeviDatum(RootDatum(Family::GL, 3), {}).description() == "gl1+gl1+gl1");
    CHECK(LeviDatum(RootDatum(Family::B, 3), {1, 3}).description() == "gl2+so3");
    CHECK(LeviDatum(RootDatum(Family::D, 4), {1, 2, 3}).description() == "gl4");
    CHECK(LeviDatum(RootDatum(Family::D, 4), {3, 4}).description() == "gl1+gl1+so4");
    CHECK(LeviDatum(RootDatum(Family::D, 4), {2, 3, 4}).description() == "gl1+so6");
    CHECK(LeviDatum(RootDatum(Family::C, 3), {2, 3}).description() == "gl1+sp4");
    CHECK_THROWS_AS(LeviDatum(RootDatum(Family::C, 3), {4}), ValidationError);
    CHECK_THROWS_AS(LeviDatum(RootDatum(Family::C, 3), {1, 1}), ValidationError);
  }

  TEST_CASE("Levi positive roots are exactly R+ within the span of S̄") {
    for (Family f : {Family::GL, Family::B, Family::C, Family::D}) {
      const int n = 4;
      RootDatum g(f, n);
      const int s = static_cast<int>(g.simple_roots().size());
      for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> sbar;
        for (int i = 0; i < s; ++i)
          if (mask & (1u << i)) sbar.push_back(i + 1);
        LeviDatum l(g, sbar);
        Weight sum(g.dim());
        for (const auto& a : l.positive_roots()) {
          sum += a;
          CHECK(g.is_positive_root(a));
        }
        CHECK(sum == 2 * l.rho_bar());
        for (const auto& a : g.positive_roots()) {
          const bool in_span = l.cone().coordinates(a).has_value();
          CHECK(in_span == l.contains_root(a));
        }
        std::size_t covered = 0;
        for (const auto& c : l.components()) covered += c.coords.size();
        CHECK(covered == g.dim());
      }
    }
  }

  TEST_CASE("pairings") {
    RootDatum c3(Family::C, 3);
    CHECK(coroot_pairing(c3.rho(), Weight{2, 0, 0}) == 3);
    CHECK(coroot_pairing(Weight(3), Weight{1, -1, 0}) == 0);
    CHECK(coroot_pairing(Weight{1, -1, 0}, Weight{1, -1, 0}) == 2);
    CHECK(pairing(Weight{1, 0, 0}, Weight{1, 1, 0}) == Rational(1));
    CHECK_THROWS(coroot_pairing(Weight{1, 0, 0}, Weight(3)));
  }

  TEST_CASE("dominance") {
    RootDatum gl3(Family::GL, 3);
    const Weight mu{2, 1, 0};
    CHECK(dominance_leq(mu, mu + Weight{1, -1, 0}, gl3.cone()));
    CHECK(dominance_leq(mu, mu, gl3.cone()));
    CHECK_FALSE(dominance_leq(Weight{1, -1, 0}, Weight(3), gl3.cone()));
    CHECK(dominance_leq(Weight(3), Weight{1, -1, 0}, gl3.cone()));
    CHECK_FALSE(dominance_leq(Weight{1, 0, 0}, Weight(3), gl3.cone()));
    CHECK(dominance_leq(Weight(3), Weight{1, 0, -1}, gl3.cone()));
  }

  TEST_CASE("linear cone test agrees with the search oracle and is a partial order") {
    for (Family f : {Family::GL, Family::B, Family::C, Family::D}) {
      RootDatum g(f, 3);
      const auto box = small_box(3, 1);
      REQUIRE(box.size() <= 200);
      const Weight xi = g.rho();
      for (const auto& x : box)
        for (const auto& y : box) {
          const bool a = dominance_leq(x, y, g.cone());
          CHECK(a == dominance_leq_search(x, y, g.positive_roots(), xi));
          if (a && x != y) CHECK_FALSE(dominance_leq(y, x, g.cone()));
        }
      std::mt19937 rng(7);
      std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
      for (int t = 0; t < 3000; ++t) {
        const auto& x = box[pick(rng)];
        const auto& y = box[pick(rng)];
        const auto& z = box[pick(rng)];
        if (dominance_leq(x, y, g.cone()) && dominance_leq(y, z, g.cone())) CHECK(dominance_leq(x, z, g.cone()));
      }
    }
  }

  TEST_CASE("lattice membership") {
    RootDatum b2(Family::B, 2), c2(Family::C, 2);
    const Weight spin = Weight::from_doubled({1, 1});
    CHECK(b2.in_lattice(spin));
    CHECK_FALSE(c2.in_lattice(spin));
    CHECK_FALSE(b2.in_lattice(Weight::from_doubled({1, 2})));
  }

  TEST_CASE("weight parsing") {
    CHECK(parse_weight("1,0,-1") == Weight{1, 0, -1});
    CHECK(parse_weight("(1/2, -3/2)") == Weight::from_doubled({1, -3}));
    CHECK(parse_weight("0.5,-0.5") == Weight::from_doubled({1, -1}));
    CHECK(parse_weight("5,2,2,1|4,3") == Weight{5, 2, 2, 1, 4, 3});
    CHECK_THROWS_AS(parse_weight("1/3"), ValidationError);
    CHECK_THROWS_AS(parse_weight("x"), ValidationError);
    CHECK(Weight::from_doubled({1, -2}).to_string() == "(1/2, -1)");
  }
}
