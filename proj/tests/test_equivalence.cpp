#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "levibranch/equivalence.hpp"
#include "levibranch/errors.hpp"

using namespace lvb;

namespace {

BranchingContext ctx_for(Family f, int n, std::vector<int> sbar) {
  return BranchingContext(LeviDatum(RootDatum(f, n), std::move(sbar)));
}

bool has(const std::vector<Coverage>& v, Coverage c) { return std::find(v.begin(), v.end(), c) != v.end(); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("equivalence") {
  TEST_CASE("induced equality examples") {
    auto gl6 = ctx_for(Family::GL, 6, {1, 2, 3, 5});
    const Weight mu{5, 2, 2, 1, 4, 3}, nu{5, 4, 3, 1, 2, 2};
    CHECK(induced_equal(gl6, mu, mu));
    CHECK(dominant_weight(gl6.datum(), mu) == dominant_weight(gl6.datum(), nu));
    const Weight r2 = 2 * gl6.levi().rho_bar();
    CHECK(mu + r2 == Weight{8, 3, 1, -2, 5, 2});
    CHECK(nu + r2 == Weight{8, 5, 2, -2, 3, 1});
    CHECK(dominant_weight(gl6.datum(), mu + r2) == dominant_weight(gl6.datum(), nu + r2));
    CHECK_FALSE(induced_equal(gl6, mu, nu));

    auto sp = ctx_for(Family::C, 6, {1, 2, 4, 5, 6});
    const Weight m{3, 2, 1, 3, 2, 1};
    for (const auto& u : sp.automorphisms()) {
      CHECK(induced_equal(sp, m, u.act(m)));
      CHECK(relating_automorphism(sp, m, u.act(m)).has_value());
    }
    CHECK_THROWS_AS(induced_equal(gl6, Weight{1, 2, 0, 0, 0, 0}, mu), ValidationError);
  }

  TEST_CASE("relating automorphisms") {
    auto gl4 = ctx_for(Family::GL, 4, {1, 3});
    CHECK(relating_automorphism(gl4, Weight{3, 1, 2, 0}, Weight{3, 1, 2, 0})->is_identity());
    const auto swap = relating_automorphism(gl4, Weight{3, 1, 2, 0}, Weight{2, 0, 3, 1});
    REQUIRE(swap.has_value());
    CHECK(swap->act(Weight{1, 2, 3, 4}) == Weight{3, 4, 1, 2});
    CHECK_FALSE(relating_automorphism(gl4, Weight{3, 1, 2, 0}, Weight{3, 2, 1, 0}).has_value());

    auto c3 = ctx_for(Family::C, 3, {1, 2});
    const auto neg = relating_automorphism(c3, Weight{2, 0, -1}, Weight{1, 0, -2});
    REQUIRE(neg.has_value());
    CHECK(weyl_element_to_json(*neg)["images"] == nlohmann::json::array({-3, -2, -1}));
  }

  TEST_CASE("classification") {
    auto c3 = ctx_for(Family::C, 3, {1, 2});
    const auto zero = classify_pair(c3, Weight(3), Weight(3));
    CHECK(zero.equal);
    CHECK(zero.relating_auto->is_identity());
    CHECK(has(zero.covered_by, Coverage::SameChamber));
    CHECK_FALSE(zero.counterexample);

    auto gl6 = ctx_for(Family::GL, 6, {1, 2, 3, 5});
    const auto rem = classify_pair(gl6, Weight{5, 2, 2, 1, 4, 3}, Weight{5, 4, 3, 1, 2, 2});
    CHECK_FALSE(rem.equal);
    CHECK(has(rem.covered_by, Coverage::TypeA));
    CHECK_FALSE(has(rem.covered_by, Coverage::Mu2RhoDominant));
    CHECK_FALSE(has(rem.covered_by, Coverage::SameChamber));
    CHECK_FALSE(rem.counterexample);
    const auto j = rem.to_json();
    CHECK(j["equal"] == false);
    CHECK(j["auto"].is_null());

    CHECK(polarisation_case(c3.levi()));
    CHECK(polarisation_case(LeviDatum(RootDatum(Family::D, 4), {1, 2, 3})));
    CHECK(polarisation_case(LeviDatum(RootDatum(Family::D, 4), {1, 2, 4})));
    CHECK_FALSE(polarisation_case(LeviDatum(RootDatum(Family::D, 3), {1, 2})));
    CHECK_FALSE(polarisation_case(LeviDatum(RootDatum(Family::C, 3), {1})));

    // an M-equal pair with mu + 2 rhō dominant in sp6 over gl3
    bool found = false;
    search_box(c3, 3, [&](const GroupReport& r) {
      for (const auto& v : r.verdicts)
        if (v.mu != v.nu && has(v.covered_by, Coverage::Mu2RhoDominant)) {
          CHECK(v.relating_auto.has_value());
          found = true;
        }
    });
    CHECK(found);
  }

  TEST_CASE("spin counterexample in so7 over gl2+so3") {
    auto b3 = ctx_for(Family::B, 3, {1, 3});
    const Weight mu = Weight::from_doubled({-1, -3, 1}), nu = Weight::from_doubled({-1, -1, 3});
    CHECK(induced_equal(b3, mu, nu));
    CHECK_FALSE(relating_automorphism(b3, mu, nu).has_value());
    const auto v = classify_pair(b3, mu, nu);
    CHECK(v.counterexample);
    CHECK(v.covered_by.empty());
    // equal branching coefficients straight from restriction
    std::size_t nonzero = 0;
    for (int a = 1; a <= 9; a += 2)
      for (int b = 1; b <= a; b += 2)
        for (int c = 1; c <= b; c += 2) {
          const auto row = branch_by_restriction(b3, Weight::from_doubled({a, b, c}));
          const auto x = row.find(mu), y = row.find(nu);
          CHECK((x == row.end() ? 0 : x->second) == (y == row.end() ? 0 : y->second));
          if (x != row.end()) ++nonzero;
        }
    CHECK(nonzero > 10);
  }

  TEST_CASE("boxes") {
    LeviDatum c2(RootDatum(Family::C, 2), {1});
    const auto box = levi_box(c2, 1);
    CHECK(box.size() == 6);
    CHECK(std::is_sorted(box.begin(), box.end()));
    LeviDatum b2(RootDatum(Family::B, 2), {1});
    CHECK(levi_box(b2, 1).size() == 6 + 3);
  }

  TEST_CASE("search examples") {
    auto full = ctx_for(Family::C, 2, {1, 2});
    const auto s0 = search_box(full, 3, nullptr);
    CHECK(s0.equal_pairs == 0);
    CHECK(s0.pairs_tested == 0);
    CHECK(s0.groups == s0.weights);

    auto c2 = ctx_for(Family::C, 2, {1});
    const auto s1 = search_box(c2, 4, nullptr);
    CHECK(s1.counterexamples == 0);
    CHECK(s1.equal_pairs == s1.autos_found);
    CHECK(s1.equal_pairs > 0);

    auto gl4 = ctx_for(Family::GL, 4, {1, 3});
    std::size_t equal = 0;
    const auto s2 = search_box(gl4, 3, [&](const GroupReport& r) {
      for (const auto& v : r.verdicts) {
        REQUIRE(v.relating_auto.has_value());
        CHECK_FALSE(v.relating_auto->is_identity());
        CHECK(v.relating_auto->act(Weight{1, 2, 3, 4}) == Weight{3, 4, 1, 2});
        ++equal;
      }
    });
    CHECK(s2.counterexamples == 0);
    CHECK(equal == s2.equal_pairs);
    CHECK(equal > 0);
  }

  TEST_CASE("necessary conditions hold for M-equal pairs") {
    for (auto [f, n, sbar] : std::vector<std::tuple<Family, int, std::vector<int>>>{
             {Family::C, 2, {1}}, {Family::GL, 4, {1, 3}}, {Family::B, 3, {1, 3}}, {Family::D, 4, {1, 3, 4}}}) {
      auto ctx = ctx_for(f, n, sbar);
      const auto box = levi_box(ctx.levi(), 1);
      std::vector<MFunction> ms;
      for (const auto& m : box) ms.push_back(build_M(ctx, m));
      const Weight r2 = 2 * ctx.levi().rho_bar();
      for (std::size_t i = 0; i < box.size(); ++i) {
        for (const auto& u : ctx.automorphisms()) {
          const Weight v = u.act(box[i]);
          CHECK(ctx.levi().is_dominant(v));
          CHECK(build_M(ctx, v) == ms[i]);
        }
        for (std::size_t j = i + 1; j < box.size(); ++j) {
          if (!(ms[i] == ms[j])) continue;
          CHECK(dominant_weight(ctx.datum(), box[i]) == dominant_weight(ctx.datum(), box[j]));
          CHECK(dominant_weight(ctx.datum(), box[i] + r2) == dominant_weight(ctx.datum(), box[j] + r2));
          CHECK(induced_equal(ctx, box[i], box[j]));
        }
      }
    }
  }

  TEST_CASE("search output does not depend on threads") {
    auto ctx = ctx_for(Family::C, 3, {1, 2});
    auto collect = [&](unsigned threads) {
      std::string out;
      search_box(
          ctx, 2,
          [&](const GroupReport& r) {
            for (const auto& v : r.verdicts) out += v.to_json().dump() + "\n";
          },
          threads);
      return out;
    };
    const auto one = collect(1);
    CHECK_FALSE(one.empty());
    CHECK(one == collect(3));
  }

  TEST_CASE("certificate files resume byte-identically") {
    namespace fs = std::filesystem;
    auto ctx = ctx_for(Family::C, 3, {1, 2});
    const auto dir = fs::temp_directory_path() / "lvb_resume_test";
    fs::create_directories(dir);
    const auto ref = dir / "ref.jsonl", part = dir / "part.jsonl";
    const auto s = search_to_file(ctx, 2, ref);
    const std::string full = slurp(ref);
    nlohmann::json ref_ckpt;
    std::ifstream(ref.string() + ".ckpt") >> ref_ckpt;
    CHECK(ref_ckpt["next_group"] == s.groups);

    // replay the groups to find a checkpoint in the middle
    std::vector<GroupReport> reports;
    search_box(ctx, 2, [&](const GroupReport& r) { reports.push_back(r); });
    std::size_t cut = 0, offset = 0;
    SearchSummary upto;
    for (const auto& r : reports) {
      if (r.index >= reports.size() / 2 && !r.verdicts.empty()) break;
      upto.pairs_tested += r.pairs_tested;
      for (const auto& v : r.verdicts) {
        offset += v.to_json().dump().size() + 1;
        ++upto.equal_pairs;
        if (v.relating_auto) ++upto.autos_found;
        if (v.counterexample) ++upto.counterexamples;
      }
      cut = r.index + 1;
    }
    REQUIRE(offset < full.size());
    {
      std::ofstream f(part, std::ios::binary);
      f << full.substr(0, offset) << "{\"mu\":[1,";  // torn write
      std::ofstream c(part.string() + ".ckpt");
      c << nlohmann::json{{"system", ref_ckpt["system"]},
                          {"bound", 2},
                          {"next_group", cut},
                          {"offset", offset},
                          {"pairs_tested", upto.pairs_tested},
                          {"equal_pairs", upto.equal_pairs},
                          {"autos_found", upto.autos_found},
                          {"counterexamples", upto.counterexamples}}
               .dump();
    }
    const auto r = search_to_file(ctx, 2, part, 1, true);
    CHECK(slurp(part) == full);
    CHECK(r.pairs_tested == s.pairs_tested);
    CHECK(r.equal_pairs == s.equal_pairs);
    CHECK(r.autos_found == s.autos_found);

    auto other = ctx_for(Family::C, 3, {1});
    CHECK_THROWS_AS(search_to_file(other, 2, part, 1, true), IoError);
    fs::remove_all(dir);
  }
}
