#pragma once

#include <map>
#include <string>

#include "goodfilt/chars.hpp"
#include "goodfilt/rootsys.hpp"

namespace goodfilt::jantzen {

using chars::WeightMultiset;
using chars::WeylCombo;
using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

struct JsfOutput {
  WeylCombo combo;  // chi-basis expansion of the layer-sum character
  Weight lambda;
  Int p = 0;
};

// Jantzen sum formula:
//   sum_{alpha>0} sum_{0 < mp < <lambda+rho,alpha^vee>, p | mp}
//     nu_p(mp) * chi(lambda - (<lambda+rho,alpha^vee> - mp) alpha).
// The reflected argument is s_{alpha,mp}.lambda; with the other sign
// convention the worked examples come out globally negated.
JsfOutput jsf(const RootSystemData& rs, Int p, const Weight& lambda);

// nabla(lambda) is simple iff the layer sum vanishes.
bool is_simple_nabla(const RootSystemData& rs, Int p, const Weight& lambda);

// Closed integer interval, used for multiplicities that the sum formula
// bounds but does not always determine.
struct Bound {
  Int lo = 0;
  Int hi = 0;
  bool point() const { return lo == hi; }
};

// Everything the sum formula yields about nabla(lambda) over F_p:
//   layer_sum[mu]  bounds sum_{i>0} [nabla^i(lambda) : L(mu)]
//   factors[mu]    bounds [nabla(lambda) : L(mu)]  (factors[lambda] = [1,1])
// A layer-sum coefficient c certifies the factor multiplicity only when
// c <= 1; c >= 2 leaves [1, c] because the layers are nested.  Interval
// arithmetic propagates bounds through rows that are themselves inexact.
struct FactorRow {
  WeylCombo jsf_combo;
  std::map<Weight, Bound> layer_sum;
  std::map<Weight, Bound> factors;
  bool layer_sum_exact = true;
  bool exact = true;  // all factor intervals are points
};

// Cached per (type, rank, p, lambda); the reference stays valid for the
// process lifetime.
const FactorRow& factor_row(const RootSystemData& rs, Int p, const Weight& lambda);

struct FactorMap {
  std::map<Weight, Int> factors;  // exact values, or upper bounds when !exact
  bool exact = true;
};

FactorMap composition_factors(const RootSystemData& rs, Int p, const Weight& lambda);

// ch L(lambda) in the chi-basis, by triangular recursion through
// composition factors.  Throws Ambiguous when some needed multiplicity is
// not pinned to a point.  Memoized; see the cache helpers below.
WeylCombo simple_char(const RootSystemData& rs, Int p, const Weight& lambda);

// Max <mu, alpha_0^vee> over the support of the layer sum: the L-basis
// support when that expansion is exact, the chi-basis support otherwise.
// Throws SimpleModule when the layer sum vanishes.
Int jsf_support_pairing_bound(const RootSystemData& rs, Int p, const Weight& lambda);

// Simple-character memo, exposed for persistence.  Keys are "type/rank/p/weight",
// e.g. "A/2/3/(1,1)".
std::string simple_char_cache_key(const RootSystemData& rs, Int p, const Weight& lambda);
std::map<std::string, WeylCombo> simple_char_cache_snapshot();
void simple_char_cache_insert(const std::string& key, const WeylCombo& value);
void clear_caches();

}  // namespace goodfilt::jantzen
