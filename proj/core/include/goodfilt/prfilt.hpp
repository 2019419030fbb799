#pragma once

#include <map>

#include "goodfilt/chars.hpp"
#include "goodfilt/rootsys.hpp"

namespace goodfilt::prfilt {

using chars::WeightMultiset;
using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

// ch nabla^{(p,r)}(lambda) = ch L(lambda_0) * twist(ch nabla(lambda_1), p, r)
// with lambda = lambda_0 + p^r lambda_1, lambda_0 restricted.  Ambiguous
// propagates from the simple character of lambda_0.
WeightMultiset nabla_pr_char(const RootSystemData& rs, Int p, int r, const Weight& lambda);

struct PrDecomposition {
  std::map<Weight, Int> mults;  // dominant weight -> multiplicity of nabla^{(p,r)}
  WeightMultiset residual;      // empty iff the decomposition succeeded
  bool success() const { return residual.empty(); }
};

// Peels dominance-maximal support weights against nabla_pr_char.  A negative
// peel coefficient is not an error: the input then has no character-level
// decomposition in this basis, and the partial result plus residual is the
// diagnostic.  Throws NotWInvariant when a maximal support weight is not
// dominant.
PrDecomposition decompose_pr(const RootSystemData& rs, Int p, int r, const WeightMultiset& m);

}  // namespace goodfilt::prfilt
