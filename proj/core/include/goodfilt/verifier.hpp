#pragma once

#include <array>
#include <string>
#include <vector>

#include "goodfilt/criteria.hpp"
#include "goodfilt/rootsys.hpp"

namespace goodfilt::verifier {

using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

enum class VerdictKind {
  ClearedByBound,
  ClearedBySimplicity,
  ClearedByObstructionSearch,
  ClearedByDuality,
  Undetermined,
};
inline constexpr int kVerdictKinds = 5;

std::string verdict_name(VerdictKind kind);

struct WitnessPair {
  Weight sigma;
  Weight mu;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undetermined;
  criteria::GuaranteeReason reason;      // ClearedByBound
  Weight partner;                        // ClearedByDuality
  std::vector<WitnessPair> witnesses;    // Undetermined: pairs surviving every test
  std::vector<Weight> sigma_candidates;  // candidate set at this weight's cap, when computed
  bool candidates_computed = false;
  bool factors_consulted = false;  // obstruction search reached the mu-set
  bool factors_exact = true;       // whether that mu-set came from exact factors
  std::string note;
};

struct ReportEntry {
  Weight lambda;
  Verdict verdict;
};

struct CaseReport {
  std::string system;
  Int p = 0;
  std::vector<ReportEntry> results;  // all of X_1, lexicographic
  std::vector<Weight> survivors_after_bounds;
  std::vector<Weight> survivors_after_simplicity;
  // bound survivors whose Ext^1 candidate set at their own cap is non-empty
  std::vector<Weight> survivors_with_candidates;
  std::array<std::size_t, kVerdictKinds> counts{};
  std::vector<std::string> notes;
  std::size_t undetermined_count() const { return counts[static_cast<int>(VerdictKind::Undetermined)]; }
  bool all_cleared() const { return undetermined_count() == 0; }
};

// Dominant sigma != 0 with <sigma, alpha_0^vee> <= pairing_cap that might
// carry Ext^1(k, L(sigma)) != 0: sigma must be linked to 0 and
// [nabla(sigma) : L(0)] must not be provably zero.  Over-approximation: a
// larger set can only produce more witnesses, never a false clearing.
std::vector<Weight> ext1_candidates(const RootSystemData& rs, Int p, Int pairing_cap);

// Pipeline: closed-form guarantee, then simplicity, then the obstruction
// search over (sigma, mu) with p*sigma <= lambda + mu, then (type A) the
// -w_0 partner.  Weights surviving everything come back Undetermined with
// the witness pairs.
Verdict check_weight(const RootSystemData& rs, Int p, const Weight& lambda);

// check_weight over all of X_1 plus the intermediate survivor sets.
CaseReport verify_rank(const RootSystemData& rs, Int p);

struct CounterexampleReport {
  int n = 0;
  Int p = 0;          // 2(n+1) - 5
  Weight mu;          // omega_1 + ... + omega_{n-1}
  Weight lambda;      // p * mu
  Int pairing = 0;    // <lambda, alpha_0^vee>
  Int bound = 0;      // (p-1)(h-1)
  bool pairing_ok = false;
  bool mu_not_simple = false;
  bool confirmed = false;
  std::string conclusion;
};

// The type-A family where St_1 (x) L(lambda) has no good filtration even
// though <lambda, alpha_0^vee> <= (p-1)(h-1).  Throws NotPrime when
// 2(n+1)-5 is composite.
CounterexampleReport counterexample_check(int n);

}  // namespace goodfilt::verifier
