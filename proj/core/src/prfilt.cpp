#include "goodfilt/prfilt.hpp"

#include <set>

#include "goodfilt/jantzen.hpp"

namespace goodfilt::prfilt {

WeightMultiset nabla_pr_char(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  auto [base, twist] = rootsys::digit_split(lambda, p, r);
  WeightMultiset head = chars::combo_to_multiset(rs, jantzen::simple_char(rs, p, base));
  WeightMultiset tail = chars::frobenius_twist(rs, chars::freudenthal(rs, twist), p, r);
  return chars::tensor(rs, head, tail);
}

PrDecomposition decompose_pr(const RootSystemData& rs, Int p, int r, const WeightMultiset& m) {
  PrDecomposition out;
  WeightMultiset rest;
  for (const auto& [w, mult] : m)
    if (mult != 0) rest[w] = mult;

  std::set<Weight> peeled;
  while (!rest.empty()) {
    const Weight* top = chars::max_support_weight(rs, rest);
    if (!top) throw NonTerminating("no dominance-maximal weight found");
    if (!top->dominant())
      throw NotWInvariant("maximal support weight " + rootsys::to_string(*top) + " is not dominant");
    Weight lam = *top;
    Int coeff = rest[lam];
    if (coeff < 0) {
      // The input has no expansion with non-negative multiplicities in this
      // basis; hand back what was peeled plus the obstruction.
      out.residual = std::move(rest);
      return out;
    }
    if (!peeled.insert(lam).second)
      throw NonTerminating("weight " + rootsys::to_string(lam) + " peeled twice");
    out.mults[lam] = coeff;
    for (const auto& [w, mult] : nabla_pr_char(rs, p, r, lam)) {
      Int next = checked::sub(rest.count(w) ? rest[w] : 0, checked::mul(coeff, mult));
      if (next == 0)
        rest.erase(w);
      else
        rest[w] = next;
    }
  }
  return out;
}

}  // namespace goodfilt::prfilt
