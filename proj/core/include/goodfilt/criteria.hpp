#pragma once

#include <string>
#include <vector>

#include "goodfilt/rootsys.hpp"

namespace goodfilt::criteria {

using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

// Sufficient conditions for St_r (x) L(lambda) to carry a good filtration,
// in the order good_filtration_guarantee tries them.
enum class GuaranteeRule {
  None,
  SmallPairing,  // <lambda, alpha_0^vee> <= p^r
  WindowBound,   // p >= h and <lambda, alpha_0^vee> < p^r (p - h + 1)
  LargeTwist,    // <lambda_0, alpha_0^vee> <= p^r (<lambda_1, alpha^vee> + 1) for all simple alpha
  DigitSplit,    // every base-p digit of lambda in X_r passes SmallPairing or WindowBound at r=1
};

std::string rule_name(GuaranteeRule rule);  // "none", "small_pairing", ...

struct GuaranteeReason {
  GuaranteeRule rule = GuaranteeRule::None;
  std::vector<GuaranteeRule> digit_rules;  // per digit, DigitSplit only
};

// Jantzen's Satz 9 simplicity criterion, type A only (WrongType otherwise).
// For every positive root alpha with <lambda+rho, alpha^vee> = a p^s + b p^{s+1}
// exceeding p, positive roots beta_0, ..., beta_b must exist with
// <lambda+rho, beta_0^vee> = a p^s, <lambda+rho, beta_i^vee> = p^{s+1} for
// i >= 1, alpha = sum beta_i, and alpha - beta_0 a root or zero.
bool satz9_simple(const RootSystemData& rs, Int p, const Weight& lambda);

// <lambda + rho, alpha_0^vee> <= p forces L(lambda) = nabla(lambda).
bool trivially_simple(const RootSystemData& rs, Int p, const Weight& lambda);

bool bound_smallp(const RootSystemData& rs, Int p, int r, const Weight& lambda);

bool bound_lambdaalpha0(const RootSystemData& rs, Int p, int r, const Weight& lambda);

struct MuWindow {
  Int lo = 0;
  Int hi = 0;
  bool empty() const { return lo > hi; }
};

// Admissible <mu, alpha_0^vee> range for a nonvanishing Ext^1 against
// St_r (x) L(lambda); an empty window certifies a good filtration.
// Throws PTooSmall when p < h - 1.
MuWindow mu_window(const RootSystemData& rs, Int p, int r, const Weight& lambda);

// <lambda, alpha_0^vee> <= <nu, alpha^vee> + 1 for every simple alpha.
bool bound_bignu(const RootSystemData& rs, const Weight& lambda, const Weight& nu);

// Splits lambda = lambda_0 + p^r lambda_1 internally (lambda_0 restricted)
// and tests <lambda_0, alpha_0^vee> <= p^r (<lambda_1, alpha^vee> + 1) for
// every simple alpha.
bool bound_storlambda1(const RootSystemData& rs, Int p, int r, const Weight& lambda);

// <lambda, alpha_0^vee> < p^r (p - h + 1): L(lambda) = nabla^{(p,r)}(lambda).
bool nablapr_is_simple(const RootSystemData& rs, Int p, int r, const Weight& lambda);

// First applicable rule in the fixed order SmallPairing -> WindowBound ->
// LargeTwist -> DigitSplit, else None.
GuaranteeReason good_filtration_guarantee(const RootSystemData& rs, Int p, int r,
                                          const Weight& lambda);

}  // namespace goodfilt::criteria
