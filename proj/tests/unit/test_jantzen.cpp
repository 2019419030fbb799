#include <map>

#include "doctest.h"
#include "goodfilt/chars.hpp"
#include "goodfilt/jantzen.hpp"
#include "goodfilt/rootsys.hpp"

using goodfilt::Int;
using goodfilt::chars::WeylCombo;
using goodfilt::rootsys::build;
using goodfilt::rootsys::TypeLabel;
using goodfilt::rootsys::Weight;
namespace chars = goodfilt::chars;
namespace jantzen = goodfilt::jantzen;
namespace rootsys = goodfilt::rootsys;

namespace {

std::map<Weight, Int> exact_factors(const jantzen::FactorMap& fm) {
  REQUIRE(fm.exact);
  return fm.factors;
}

}  // namespace

TEST_CASE("sum formula guards") {
  auto a2 = build(TypeLabel::A, 2);
  CHECK_THROWS_AS(jantzen::jsf(a2, 4, Weight{1, 1}), goodfilt::NotPrime);
  CHECK_THROWS_AS(jantzen::jsf(a2, 3, Weight{-1, 0}), goodfilt::NotDominant);
}

TEST_CASE("A2 sum formula hand values") {
  auto a2 = build(TypeLabel::A, 2);
  // sign convention anchor: the layer sum for (1,1) at p=3 is +chi(0,0)
  CHECK(jantzen::jsf(a2, 3, Weight{1, 1}).combo == WeylCombo{{Weight{0, 0}, 1}});
  CHECK_FALSE(jantzen::is_simple_nabla(a2, 3, Weight{1, 1}));
  CHECK(jantzen::is_simple_nabla(a2, 3, Weight{2, 2}));
  CHECK(jantzen::is_simple_nabla(a2, 3, Weight{1, 0}));
  CHECK(jantzen::is_simple_nabla(a2, 3, Weight{0, 0}));

  CHECK(exact_factors(jantzen::composition_factors(a2, 3, Weight{1, 1})) ==
        std::map<Weight, Int>{{Weight{1, 1}, 1}, {Weight{0, 0}, 1}});
  CHECK(jantzen::simple_char(a2, 3, Weight{1, 1}) ==
        WeylCombo{{Weight{1, 1}, 1}, {Weight{0, 0}, -1}});
}

TEST_CASE("A3 sum formula hand values at p=3") {
  auto a3 = build(TypeLabel::A, 3);

  CHECK(jantzen::jsf(a3, 3, Weight{1, 2, 1}).combo ==
        WeylCombo{{Weight{0, 2, 0}, 1}, {Weight{0, 0, 0}, -1}});
  CHECK(exact_factors(jantzen::composition_factors(a3, 3, Weight{1, 2, 1})) ==
        std::map<Weight, Int>{{Weight{1, 2, 1}, 1}, {Weight{0, 2, 0}, 1}});

  CHECK(jantzen::jsf(a3, 3, Weight{2, 1, 2}).combo == WeylCombo{{Weight{0, 1, 0}, 1}});
  CHECK(exact_factors(jantzen::composition_factors(a3, 3, Weight{2, 1, 2})) ==
        std::map<Weight, Int>{{Weight{2, 1, 2}, 1}, {Weight{0, 1, 0}, 1}});

  CHECK(jantzen::jsf(a3, 3, Weight{0, 0, 3}).combo ==
        WeylCombo{{Weight{0, 1, 1}, 1}, {Weight{1, 0, 0}, -1}});
  CHECK(jantzen::jsf(a3, 3, Weight{0, 1, 1}).combo == WeylCombo{{Weight{1, 0, 0}, 1}});
  CHECK(jantzen::jsf(a3, 3, Weight{0, 2, 0}).combo == WeylCombo{{Weight{0, 0, 0}, 1}});
  CHECK(jantzen::jsf(a3, 3, Weight{2, 0, 2}).combo == WeylCombo{{Weight{1, 0, 1}, 1}});
  CHECK(jantzen::is_simple_nabla(a3, 3, Weight{1, 0, 1}));
  CHECK(jantzen::is_simple_nabla(a3, 3, Weight{2, 0, 0}));
  CHECK(jantzen::is_simple_nabla(a3, 3, Weight{1, 0, 0}));
}

TEST_CASE("nested layers leave an interval") {
  auto a3 = build(TypeLabel::A, 3);
  const auto& row = jantzen::factor_row(a3, 3, Weight{1, 1, 2});
  REQUIRE(row.layer_sum_exact);
  auto point = [&](const Weight& w) {
    const jantzen::Bound& b = row.layer_sum.at(w);
    REQUIRE(b.point());
    return b.lo;
  };
  CHECK(point(Weight{0, 0, 3}) == 1);
  CHECK(point(Weight{0, 1, 1}) == 2);
  CHECK(point(Weight{1, 0, 0}) == 1);
  CHECK(row.layer_sum.size() == 3);
  CHECK_FALSE(row.exact);

  CHECK(row.factors.at(Weight{0, 1, 1}).lo == 1);
  CHECK(row.factors.at(Weight{0, 1, 1}).hi == 2);
  CHECK(row.factors.at(Weight{0, 0, 3}).point());
  CHECK(row.factors.at(Weight{1, 1, 2}).point());

  auto fm = jantzen::composition_factors(a3, 3, Weight{1, 1, 2});
  CHECK_FALSE(fm.exact);
  CHECK(fm.factors ==
        std::map<Weight, Int>{{Weight{1, 1, 2}, 1},
                              {Weight{0, 0, 3}, 1},
                              {Weight{0, 1, 1}, 2},
                              {Weight{1, 0, 0}, 1}});

  CHECK_THROWS_AS(jantzen::simple_char(a3, 3, Weight{1, 1, 2}), goodfilt::Ambiguous);
}

TEST_CASE("B2 sum formula hand values") {
  auto b2 = build(TypeLabel::B, 2);
  CHECK(jantzen::is_simple_nabla(b2, 3, Weight{2, 1}));
  CHECK(jantzen::is_simple_nabla(b2, 3, Weight{2, 2}));
  CHECK(jantzen::jsf(b2, 5, Weight{3, 4}).combo == WeylCombo{{Weight{0, 4}, 1}});
  CHECK(jantzen::is_simple_nabla(b2, 5, Weight{0, 4}));
  CHECK(jantzen::simple_char(b2, 5, Weight{3, 4}) ==
        WeylCombo{{Weight{3, 4}, 1}, {Weight{0, 4}, -1}});
  CHECK(exact_factors(jantzen::composition_factors(b2, 5, Weight{3, 4})) ==
        std::map<Weight, Int>{{Weight{3, 4}, 1}, {Weight{0, 4}, 1}});
}

TEST_CASE("G2 sum formula hand values") {
  auto g2 = build(TypeLabel::G, 2);
  CHECK(jantzen::is_simple_nabla(g2, 2, Weight{0, 1}));
  CHECK(jantzen::is_simple_nabla(g2, 3, Weight{1, 0}));
  CHECK(jantzen::is_simple_nabla(g2, 3, Weight{2, 0}));
  CHECK(jantzen::simple_char(g2, 3, Weight{0, 1}) ==
        WeylCombo{{Weight{0, 1}, 1}, {Weight{1, 0}, -1}});

  CHECK(jantzen::jsf(g2, 3, Weight{1, 1}).combo ==
        WeylCombo{{Weight{1, 0}, 1}, {Weight{0, 1}, 1}, {Weight{0, 0}, 1}});
  CHECK(jantzen::jsf(g2, 3, Weight{0, 2}).combo ==
        WeylCombo{{Weight{1, 1}, 1}, {Weight{0, 1}, -1}, {Weight{0, 0}, 1}});
  CHECK(jantzen::jsf(g2, 3, Weight{3, 0}).combo ==
        WeylCombo{{Weight{1, 1}, 1}, {Weight{0, 1}, 1}, {Weight{1, 0}, 1}, {Weight{0, 0}, -1}});
  CHECK(jantzen::jsf(g2, 3, Weight{1, 2}).combo ==
        WeylCombo{{Weight{3, 0}, 1}, {Weight{0, 2}, 1}, {Weight{1, 0}, -1}, {Weight{0, 0}, -1}});
  CHECK(jantzen::jsf(g2, 7, Weight{2, 0}).combo == WeylCombo{{Weight{0, 0}, 1}});

  // ch L(1,0) appears twice across the layers of nabla(1,1): the interval
  // [1,2] cannot be collapsed, so the simple character is ambiguous
  const auto& row = jantzen::factor_row(g2, 3, Weight{1, 1});
  CHECK(row.layer_sum.at(Weight{1, 0}).lo == 2);
  CHECK(row.layer_sum.at(Weight{1, 0}).hi == 2);
  CHECK(row.factors.at(Weight{1, 0}).lo == 1);
  CHECK(row.factors.at(Weight{1, 0}).hi == 2);
  CHECK(row.factors.at(Weight{0, 1}).point());
  CHECK(row.factors.at(Weight{0, 0}).point());
  CHECK_FALSE(row.exact);
  CHECK_THROWS_AS(jantzen::simple_char(g2, 3, Weight{1, 1}), goodfilt::Ambiguous);

  auto fm = jantzen::composition_factors(g2, 3, Weight{1, 1});
  CHECK_FALSE(fm.exact);
  CHECK(fm.factors == std::map<Weight, Int>{{Weight{1, 1}, 1},
                                            {Weight{1, 0}, 2},
                                            {Weight{0, 1}, 1},
                                            {Weight{0, 0}, 1}});
}

TEST_CASE("layer sum support sits strictly below lambda") {
  for (auto [t, r, p, lam] : {std::tuple{TypeLabel::A, 3, Int{3}, Weight{2, 2, 2}},
                              {TypeLabel::B, 2, Int{3}, Weight{3, 1}},
                              {TypeLabel::G, 2, Int{3}, Weight{2, 2}},
                              {TypeLabel::G, 2, Int{5}, Weight{3, 2}}}) {
    auto rs = build(t, r);
    auto out = jantzen::jsf(rs, p, lam);
    for (const auto& [nu, coeff] : out.combo) {
      CAPTURE(rootsys::to_string(nu));
      CHECK(nu != lam);
      CHECK(rootsys::dominance_le(rs, nu, lam));
    }
  }
}

TEST_CASE("support pairing bound") {
  auto b2 = build(TypeLabel::B, 2);
  CHECK_THROWS_AS(jantzen::jsf_support_pairing_bound(b2, 3, Weight{2, 1}),
                  goodfilt::SimpleModule);

  auto a3 = build(TypeLabel::A, 3);
  CHECK(jantzen::jsf_support_pairing_bound(a3, 5, Weight{4, 3, 3}) <= 7);
  CHECK(jantzen::jsf_support_pairing_bound(a3, 5, Weight{4, 3, 4}) <= 3);
  CHECK(jantzen::jsf_support_pairing_bound(a3, 5, Weight{4, 2, 4}) <= 4);
  CHECK(jantzen::jsf_support_pairing_bound(a3, 5, Weight{3, 4, 3}) <= 6);

  // exact L-basis support when the row resolves
  auto g2 = build(TypeLabel::G, 2);
  CHECK(jantzen::jsf_support_pairing_bound(g2, 3, Weight{1, 2}) <= 6);
}

TEST_CASE("simple character cache") {
  auto a2 = build(TypeLabel::A, 2);
  CHECK(jantzen::simple_char_cache_key(a2, 3, Weight{1, 1}) == "A/2/3/(1,1)");
  jantzen::simple_char(a2, 3, Weight{1, 1});
  auto snapshot = jantzen::simple_char_cache_snapshot();
  CHECK(snapshot.count("A/2/3/(1,1)") == 1);
  CHECK(snapshot.at("A/2/3/(1,1)") == WeylCombo{{Weight{1, 1}, 1}, {Weight{0, 0}, -1}});
}
