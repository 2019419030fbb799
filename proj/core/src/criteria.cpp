#include "goodfilt/criteria.hpp"

#include <set>

namespace goodfilt::criteria {

namespace {

Int alpha0_pairing(const RootSystemData& rs, const Weight& w) {
  return rootsys::pairing(rs, w, rs.alpha0());
}

// In type A every root is an interval of simple roots and every root is
// short, so <lambda+rho, .^vee> is additive on decompositions and a tiling
// by roots of fixed pairing is forced greedily from the left.
bool tile_interval(const std::vector<Int>& shifted_coords, int lo, int hi, Int target) {
  int pos = lo;
  while (pos <= hi) {
    Int acc = 0;
    int k = pos;
    while (k <= hi) {
      acc = checked::add(acc, shifted_coords[static_cast<std::size_t>(k)]);
      if (acc >= target) break;
      ++k;
    }
    if (acc != target) return false;
    pos = k + 1;
  }
  return true;
}

}  // namespace

std::string rule_name(GuaranteeRule rule) {
  switch (rule) {
    case GuaranteeRule::None: return "none";
    case GuaranteeRule::SmallPairing: return "small_pairing";
    case GuaranteeRule::WindowBound: return "window_bound";
    case GuaranteeRule::LargeTwist: return "large_twist";
    case GuaranteeRule::DigitSplit: return "digit_split";
  }
  return "none";
}

bool satz9_simple(const RootSystemData& rs, Int p, const Weight& lambda) {
  if (rs.type_label != rootsys::TypeLabel::A)
    throw WrongType("Satz 9 applies to type A only, not " + rs.name());
  if (!lambda.dominant())
    throw NotDominant("satz9_simple needs a dominant weight, got " + rootsys::to_string(lambda));

  Weight shifted = lambda + rs.rho;
  std::set<std::vector<Int>> root_set;
  for (const rootsys::Root& r : rs.positive_roots) root_set.insert(r.simple_coeffs);

  for (const rootsys::Root& alpha : rs.positive_roots) {
    Int n = rootsys::pairing(rs, shifted, alpha);
    if (n <= p) continue;
    Int s = padic_valuation(p, n);
    Int ps = checked::pow(p, static_cast<int>(s));
    Int t = n / ps;
    Int a = t % p;
    Int b = t / p;
    if (b == 0) continue;  // beta_0 = alpha settles it

    Int target0 = checked::mul(a, ps);
    Int target1 = checked::mul(ps, p);  // p^{s+1}
    bool satisfied = false;
    for (const rootsys::Root& beta0 : rs.positive_roots) {
      if (rootsys::pairing(rs, shifted, beta0) != target0) continue;
      std::vector<Int> rem = alpha.simple_coeffs;
      bool ok = true;
      for (std::size_t i = 0; i < rem.size(); ++i) {
        rem[i] -= beta0.simple_coeffs[i];
        if (rem[i] < 0) ok = false;
      }
      if (!ok) continue;
      if (!root_set.count(rem)) continue;  // alpha - beta_0 must be a root
      int lo = -1, hi = -1;
      for (int i = 0; i < rs.rank; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0) {
          if (lo < 0) lo = i;
          hi = i;
        }
      if (tile_interval(shifted.coords, lo, hi, target1)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

bool trivially_simple(const RootSystemData& rs, Int p, const Weight& lambda) {
  return alpha0_pairing(rs, lambda + rs.rho) <= p;
}

bool bound_smallp(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  return alpha0_pairing(rs, lambda) <= checked::pow(p, r);
}

bool bound_lambdaalpha0(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  if (p < rs.coxeter_h) return false;
  Int bound = checked::mul(checked::pow(p, r), checked::add(checked::sub(p, rs.coxeter_h), 1));
  return alpha0_pairing(rs, lambda) < bound;
}

MuWindow mu_window(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  if (p < rs.coxeter_h - 1)
    throw PTooSmall("mu window needs p >= h-1 = " + std::to_string(rs.coxeter_h - 1) + ", got " +
                    std::to_string(p));
  Int pr = checked::pow(p, r);
  Int spread = checked::mul(checked::sub(pr, 1), checked::sub(rs.coxeter_h, 1));
  Int pairing = alpha0_pairing(rs, lambda);
  MuWindow w;
  w.lo = checked::sub(
      checked::add(spread, checked::mul(checked::mul(2, pr), checked::add(checked::sub(p, rs.coxeter_h), 1))),
      pairing);
  w.hi = checked::add(pairing, spread);
  return w;
}

bool bound_bignu(const RootSystemData& rs, const Weight& lambda, const Weight& nu) {
  Int pairing = alpha0_pairing(rs, lambda);
  for (int i = 0; i < rs.rank; ++i)
    if (pairing > checked::add(nu[i], 1)) return false;
  return true;
}

bool bound_storlambda1(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  auto [lo, hi] = rootsys::digit_split(lambda, p, r);
  Int pr = checked::pow(p, r);
  Int pairing = alpha0_pairing(rs, lo);
  for (int i = 0; i < rs.rank; ++i)
    if (pairing > checked::mul(pr, checked::add(hi[i], 1))) return false;
  return true;
}

bool nablapr_is_simple(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  Int bound = checked::mul(checked::pow(p, r), checked::add(checked::sub(p, rs.coxeter_h), 1));
  return alpha0_pairing(rs, lambda) < bound;
}

GuaranteeReason good_filtration_guarantee(const RootSystemData& rs, Int p, int r,
                                          const Weight& lambda) {
  GuaranteeReason reason;
  if (bound_smallp(rs, p, r, lambda)) {
    reason.rule = GuaranteeRule::SmallPairing;
    return reason;
  }
  if (bound_lambdaalpha0(rs, p, r, lambda)) {
    reason.rule = GuaranteeRule::WindowBound;
    return reason;
  }
  if (bound_storlambda1(rs, p, r, lambda)) {
    reason.rule = GuaranteeRule::LargeTwist;
    return reason;
  }
  if (rootsys::is_restricted(lambda, p, r)) {
    // Base-p digits, each certified at r=1.
    std::vector<GuaranteeRule> digit_rules;
    Weight rest = lambda;
    bool all_ok = true;
    for (int k = 0; k < r; ++k) {
      auto [digit, next] = rootsys::digit_split(rest, p, 1);
      rest = next;
      if (bound_smallp(rs, p, 1, digit)) {
        digit_rules.push_back(GuaranteeRule::SmallPairing);
      } else if (bound_lambdaalpha0(rs, p, 1, digit)) {
        digit_rules.push_back(GuaranteeRule::WindowBound);
      } else {
        all_ok = false;
        break;
      }
    }
    if (all_ok) {
      reason.rule = GuaranteeRule::DigitSplit;
      reason.digit_rules = std::move(digit_rules);
      return reason;
    }
  }
  return reason;
}

}  // namespace goodfilt::criteria
