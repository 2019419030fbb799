#pragma once

#include <vector>

#include "goodfilt/rootsys.hpp"

namespace goodfilt::weyl {

using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

// Applying to a weight: matrix * (omega coords).  word[0] is the outermost
// reflection, so matrix = S_{word[0]} * S_{word[1]} * ...
struct WeylElement {
  std::vector<int> word;
  std::vector<std::vector<Int>> matrix;
  int sign = 1;
};

struct WeylGroup {
  std::vector<WeylElement> elements;  // identity first, then by word length
};

inline constexpr Int kEnumerationCap = 1000000;

// All |W| elements via breadth-first closure over simple reflections.
// Throws GroupTooLarge when the order exceeds the cap.
WeylGroup enumerate(const RootSystemData& rs, Int cap = kEnumerationCap);

std::vector<std::vector<Int>> simple_reflection_matrix(const RootSystemData& rs, int i);

Weight act(const RootSystemData& rs, const WeylElement& w, const Weight& lambda);

// w.lambda = w(lambda + rho) - rho
Weight dot_act(const RootSystemData& rs, const WeylElement& w, const Weight& lambda);

// Indices into rs.positive_roots of {beta > 0 : w^{-1}(beta) < 0}.  The sum of
// these roots equals rho - w(rho) = -(w.0); w_dot_zero_set asserts that.
std::vector<std::size_t> inversion_set(const RootSystemData& rs, const WeylElement& w);

std::vector<std::pair<const WeylElement*, Weight>> w_dot_zero_set(const RootSystemData& rs,
                                                                  const WeylGroup& group);

struct DotDominantResult {
  bool singular = false;
  int sign = 1;              // valid when !singular
  Weight dominant;           // valid when !singular
  std::vector<int> witness;  // reflections applied, outermost last
};

// Repeated simple-reflection ascent on mu + rho.  Singular iff the orbit of
// mu + rho meets a wall, i.e. <mu+rho, alpha^vee> = 0 for some positive alpha.
DotDominantResult dominant_representative_dot(const RootSystemData& rs, const Weight& mu);

// True iff sigma = w.0 + p*beta for some w in W and beta in the root lattice.
bool linked_to_zero(const RootSystemData& rs, const WeylGroup& group, const Weight& sigma, Int p);
bool linked_to_zero(const RootSystemData& rs, Int p, const Weight& sigma);

// Unique dominant weight in the ordinary (linear) W-orbit.
Weight dominant_representative(const RootSystemData& rs, const Weight& w);

// Full W-orbit of a weight, enumerated by closure over simple reflections.
std::vector<Weight> orbit(const RootSystemData& rs, const Weight& w);

}  // namespace goodfilt::weyl
