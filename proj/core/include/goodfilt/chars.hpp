#pragma once

#include <map>
#include <vector>

#include "goodfilt/rootsys.hpp"

namespace goodfilt::chars {

using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

// Sparse formal character: weight -> multiplicity, nonzero values only.
// std::map keeps iteration (and hence serialization) deterministic.
using WeightMultiset = std::map<Weight, Int>;

// Integer combination of Euler characters chi(lambda), keys dominant.
using WeylCombo = std::map<Weight, Int>;

Int mass(const WeightMultiset& m);

// Product over positive roots of <lambda+rho, alpha^vee> / <rho, alpha^vee>.
Int weyl_dim(const RootSystemData& rs, const Weight& lambda);

// Dominant weights mu <= lambda with their multiplicities in nabla(lambda),
// by Freudenthal's recursion.
std::map<Weight, Int> dominant_multiplicities(const RootSystemData& rs, const Weight& lambda);

// Full character of nabla(lambda): dominant multiplicities spread over W-orbits.
WeightMultiset freudenthal(const RootSystemData& rs, const Weight& lambda);

// All dominant mu <= lambda.
std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda);

// Euler character of an arbitrary weight: empty if mu + rho is singular, else
// {dominant representative -> sign}.
WeylCombo chi_of(const RootSystemData& rs, const Weight& mu);

WeightMultiset combo_to_multiset(const RootSystemData& rs, const WeylCombo& combo);

// Triangular inversion by peeling dominance-maximal support weights.  Throws
// NotWInvariant when a maximal support weight is not dominant, NonTerminating
// if peeling fails to drain the support.
WeylCombo multiset_to_combo(const RootSystemData& rs, const WeightMultiset& m);

// Lexicographically largest dominance-maximal support weight; nullptr when
// the multiset is empty.  The peeling loops here and in the filtration
// bookkeeping share this choice so failures reproduce.
const Weight* max_support_weight(const RootSystemData& rs, const WeightMultiset& m);

WeightMultiset tensor(const RootSystemData& rs, const WeightMultiset& a, const WeightMultiset& b);

// Scales every support weight by p^r.
WeightMultiset frobenius_twist(const RootSystemData& rs, const WeightMultiset& a, Int p, int r);

}  // namespace goodfilt::chars
