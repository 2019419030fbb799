#include <vector>

#include "doctest.h"
#include "goodfilt/criteria.hpp"
#include "goodfilt/jantzen.hpp"
#include "goodfilt/rootsys.hpp"

using goodfilt::Int;
using goodfilt::rootsys::build;
using goodfilt::rootsys::TypeLabel;
using goodfilt::rootsys::Weight;
namespace criteria = goodfilt::criteria;
namespace jantzen = goodfilt::jantzen;
namespace rootsys = goodfilt::rootsys;

TEST_CASE("Satz 9 guards") {
  auto b2 = build(TypeLabel::B, 2);
  CHECK_THROWS_AS(criteria::satz9_simple(b2, 3, Weight{1, 1}), goodfilt::WrongType);
  auto a2 = build(TypeLabel::A, 2);
  CHECK_THROWS_AS(criteria::satz9_simple(a2, 3, Weight{-1, 0}), goodfilt::NotDominant);
}

TEST_CASE("Satz 9 hand values") {
  auto a2 = build(TypeLabel::A, 2);
  CHECK_FALSE(criteria::satz9_simple(a2, 3, Weight{1, 1}));
  CHECK(criteria::satz9_simple(a2, 3, Weight{2, 2}));
  CHECK(criteria::satz9_simple(a2, 3, Weight{1, 0}));
  CHECK(criteria::satz9_simple(a2, 3, Weight{0, 0}));

  auto a3 = build(TypeLabel::A, 3);
  CHECK_FALSE(criteria::satz9_simple(a3, 3, Weight{1, 2, 1}));
  CHECK_FALSE(criteria::satz9_simple(a3, 3, Weight{2, 1, 2}));
  CHECK(criteria::satz9_simple(a3, 3, Weight{1, 0, 1}));
  CHECK(criteria::satz9_simple(a3, 3, Weight{2, 0, 0}));

  auto a4 = build(TypeLabel::A, 4);
  CHECK_FALSE(criteria::satz9_simple(a4, 5, Weight{1, 1, 1, 0}));
}

TEST_CASE("Satz 9 agrees with the sum formula on a box") {
  for (auto [t, r] : {std::pair{TypeLabel::A, 2}, {TypeLabel::A, 3}}) {
    auto rs = build(t, r);
    for (Int p : {2, 3}) {
      std::vector<Int> c(static_cast<std::size_t>(rs.rank), 0);
      Int cap = 2 * p - 1;
      for (;;) {
        Weight lambda(c);
        CAPTURE(rs.name());
        CAPTURE(p);
        CAPTURE(rootsys::to_string(lambda));
        CHECK(criteria::satz9_simple(rs, p, lambda) == jantzen::is_simple_nabla(rs, p, lambda));
        std::size_t i = 0;
        while (i < c.size() && c[i] == cap) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
      }
    }
  }
}

TEST_CASE("trivial simplicity bound") {
  auto a2 = build(TypeLabel::A, 2);
  CHECK(criteria::trivially_simple(a2, 3, Weight{1, 0}));
  CHECK_FALSE(criteria::trivially_simple(a2, 3, Weight{1, 1}));
  auto g2 = build(TypeLabel::G, 2);
  CHECK(criteria::trivially_simple(g2, 7, Weight{1, 0}));  // <lambda+rho,a0> = 7
  CHECK_FALSE(criteria::trivially_simple(g2, 7, Weight{2, 0}));
}

TEST_CASE("closed-form filtration bounds") {
  auto a2 = build(TypeLabel::A, 2);
  CHECK(criteria::bound_smallp(a2, 3, 1, Weight{2, 1}));        // 3 <= 3
  CHECK_FALSE(criteria::bound_smallp(a2, 3, 1, Weight{2, 2}));  // 4 > 3
  CHECK(criteria::bound_smallp(a2, 3, 2, Weight{4, 4}));        // 8 <= 9

  CHECK(criteria::bound_lambdaalpha0(a2, 3, 1, Weight{1, 1}));        // 2 < 3*1
  CHECK_FALSE(criteria::bound_lambdaalpha0(a2, 3, 1, Weight{2, 1}));  // 3 == 3*1
  auto a3 = build(TypeLabel::A, 3);
  CHECK_FALSE(criteria::bound_lambdaalpha0(a3, 3, 1, Weight{0, 0, 1}));  // p < h
  CHECK(criteria::bound_lambdaalpha0(a3, 5, 1, Weight{4, 3, 1}));        // 8 < 10

  CHECK(criteria::bound_bignu(a2, Weight{2, 1}, Weight{2, 2}));
  CHECK_FALSE(criteria::bound_bignu(a2, Weight{2, 2}, Weight{1, 2}));

  // lambda = (1,1) + 3*(2,0): the twist part dominates the restricted part
  CHECK(criteria::bound_storlambda1(a2, 3, 1, Weight{7, 1}));
  CHECK_FALSE(criteria::bound_storlambda1(a2, 3, 1, Weight{2, 2}));
}

TEST_CASE("mu window") {
  auto a3 = build(TypeLabel::A, 3);
  auto w = criteria::mu_window(a3, 5, 1, Weight{4, 3, 3});
  CHECK(w.lo == 22);
  CHECK(w.hi == 22);
  CHECK_FALSE(w.empty());

  auto narrow = criteria::mu_window(a3, 5, 1, Weight{1, 0, 0});
  CHECK(narrow.lo == 31);
  CHECK(narrow.hi == 13);
  CHECK(narrow.empty());

  auto g2 = build(TypeLabel::G, 2);
  CHECK_THROWS_AS(criteria::mu_window(g2, 3, 1, Weight{1, 1}), goodfilt::PTooSmall);
  CHECK_NOTHROW(criteria::mu_window(g2, 5, 1, Weight{1, 1}));
}

TEST_CASE("nabla_pr simplicity window") {
  auto a2 = build(TypeLabel::A, 2);
  CHECK(criteria::nablapr_is_simple(a2, 5, 1, Weight{4, 4}));         // 8 < 15
  CHECK_FALSE(criteria::nablapr_is_simple(a2, 3, 1, Weight{2, 1}));   // 3 >= 3
  CHECK(criteria::nablapr_is_simple(a2, 3, 2, Weight{4, 4}));         // 8 < 9
}

TEST_CASE("guarantee picks rules in a fixed order") {
  auto a2 = build(TypeLabel::A, 2);

  // both the pairing bound and the window apply; the pairing bound is first
  auto g44 = criteria::good_filtration_guarantee(a2, 3, 2, Weight{4, 4});
  CHECK(g44.rule == criteria::GuaranteeRule::SmallPairing);

  auto g75 = criteria::good_filtration_guarantee(a2, 3, 2, Weight{7, 5});
  CHECK(g75.rule == criteria::GuaranteeRule::DigitSplit);
  CHECK(g75.digit_rules == std::vector<criteria::GuaranteeRule>{
                               criteria::GuaranteeRule::SmallPairing,
                               criteria::GuaranteeRule::SmallPairing});
  // none of the single-shot rules covers (7,5) at r=2
  CHECK_FALSE(criteria::bound_smallp(a2, 3, 2, Weight{7, 5}));
  CHECK_FALSE(criteria::bound_lambdaalpha0(a2, 3, 2, Weight{7, 5}));
  CHECK_FALSE(criteria::bound_storlambda1(a2, 3, 2, Weight{7, 5}));

  auto none = criteria::good_filtration_guarantee(a2, 3, 1, Weight{2, 2});
  CHECK(none.rule == criteria::GuaranteeRule::None);

  auto twist = criteria::good_filtration_guarantee(a2, 3, 1, Weight{7, 1});
  CHECK(twist.rule == criteria::GuaranteeRule::LargeTwist);
}

TEST_CASE("rule names") {
  CHECK(criteria::rule_name(criteria::GuaranteeRule::None) == "none");
  CHECK(criteria::rule_name(criteria::GuaranteeRule::SmallPairing) == "small_pairing");
  CHECK(criteria::rule_name(criteria::GuaranteeRule::WindowBound) == "window_bound");
  CHECK(criteria::rule_name(criteria::GuaranteeRule::LargeTwist) == "large_twist");
  CHECK(criteria::rule_name(criteria::GuaranteeRule::DigitSplit) == "digit_split");
}
