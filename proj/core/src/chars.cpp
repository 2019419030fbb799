#include "goodfilt/chars.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "goodfilt/weyl.hpp"

namespace goodfilt::chars {

namespace {

Int height_of(const std::vector<Int>& coeffs) {
  Int h = 0;
  for (Int c : coeffs) h = checked::add(h, c);
  return h;
}

// Freudenthal tables are re-read constantly by the basis conversions and the
// verifier, so dominant multiplicities are memoized per (system, lambda).
std::mutex g_cache_mutex;
std::map<std::pair<std::string, Weight>, std::map<Weight, Int>> g_dominant_mult_cache;

std::map<Weight, Int> compute_dominant_multiplicities(const RootSystemData& rs,
                                                      const Weight& lambda) {
  // Ordering by height of lambda - mu makes every multiplicity the recursion
  // needs available before it is asked for.
  struct Entry {
    Weight mu;
    std::vector<Int> diff_coeffs;  // lambda - mu in simple roots
    Int ht = 0;
  };
  std::vector<Entry> entries;
  for (Weight& mu : [&] { return dominant_weights_below(rs, lambda); }()) {
    auto coeffs = rootsys::dominance_leq(rs, mu, lambda);
    if (!coeffs) throw Error("internal: dominant weight below lambda fails dominance test");
    Int ht = height_of(*coeffs);
    entries.push_back({std::move(mu), std::move(*coeffs), ht});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.ht != b.ht) return a.ht < b.ht;
    return a.mu < b.mu;
  });

  std::map<Weight, Int> table;
  for (const Entry& e : entries) {
    if (e.ht == 0) {
      table[e.mu] = 1;
      continue;
    }
    // ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m_mu
    //   = 2 sum_{alpha>0} sum_{k>=1} m_{mu+k alpha} (mu + k alpha, alpha)
    // with (.,.) normalised so short roots have half-norm 1.
    Int lhs_factor = 0;
    for (int i = 0; i < rs.rank; ++i) {
      Int term = checked::mul(e.diff_coeffs[static_cast<std::size_t>(i)],
                              rs.simple_half_norms[static_cast<std::size_t>(i)]);
      term = checked::mul(term, checked::add(checked::add(lambda[i], e.mu[i]), 2));
      lhs_factor = checked::add(lhs_factor, term);
    }
    Int rhs = 0;
    for (const rootsys::Root& alpha : rs.positive_roots) {
      Int mu_pairing = rootsys::pairing(rs, e.mu, alpha);
      std::vector<Int> remaining = e.diff_coeffs;
      for (Int k = 1;; ++k) {
        bool in_range = true;
        for (int i = 0; i < rs.rank; ++i) {
          remaining[static_cast<std::size_t>(i)] = checked::sub(
              remaining[static_cast<std::size_t>(i)], alpha.simple_coeffs[static_cast<std::size_t>(i)]);
          if (remaining[static_cast<std::size_t>(i)] < 0) in_range = false;
        }
        if (!in_range) break;
        Weight shifted = e.mu;
        for (int i = 0; i < rs.rank; ++i)
          shifted[i] = checked::mul_add(k, alpha.omega_coords[i], e.mu[i]);
        auto it = table.find(weyl::dominant_representative(rs, shifted));
        if (it == table.end()) continue;
        Int inner = checked::mul_add(2, k, mu_pairing);  // <mu, alpha^vee> + 2k
        Int term = checked::mul(it->second, checked::mul(alpha.half_norm, inner));
        rhs = checked::add(rhs, term);
      }
    }
    rhs = checked::mul(2, rhs);
    if (lhs_factor <= 0 || rhs % lhs_factor != 0)
      throw Error("internal: Freudenthal recursion produced a non-integral multiplicity at " +
                  rootsys::to_string(e.mu));
    table[e.mu] = rhs / lhs_factor;
  }
  return table;
}

}  // namespace

Int mass(const WeightMultiset& m) {
  Int total = 0;
  for (const auto& [w, mult] : m) total = checked::add(total, mult);
  return total;
}

Int weyl_dim(const RootSystemData& rs, const Weight& lambda) {
  if (!lambda.dominant()) throw NotDominant("weyl_dim needs a dominant weight, got " + rootsys::to_string(lambda));
  Weight shifted = lambda + rs.rho;
  Int num = 1, den = 1;
  for (const rootsys::Root& alpha : rs.positive_roots) {
    Int a = rootsys::pairing(rs, shifted, alpha);
    Int b = rootsys::pairing(rs, rs.rho, alpha);
    Int g = std::gcd(a, b);
    a /= g;
    b /= g;
    // Cross-reduce before multiplying to keep intermediates in range.
    g = std::gcd(num, b);
    num /= g;
    b /= g;
    g = std::gcd(a, den);
    a /= g;
    den /= g;
    num = checked::mul(num, a);
    den = checked::mul(den, b);
  }
  if (den != 1) throw Error("internal: Weyl dimension did not reduce to an integer");
  return num;
}

std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda) {
  if (!lambda.dominant())
    throw NotDominant("dominant_weights_below needs a dominant weight, got " + rootsys::to_string(lambda));
  Weight lowest = -weyl::dominant_representative(rs, -lambda);
  auto box = rootsys::dominance_leq(rs, lowest, lambda);
  if (!box) throw Error("internal: lowest weight fails dominance test");

  std::vector<Weight> out;
  std::vector<Int> c(static_cast<std::size_t>(rs.rank), 0);
  for (;;) {
    Weight mu = lambda - rootsys::omega_coords_of(rs, c);
    if (mu.dominant()) out.push_back(mu);
    int i = 0;
    while (i < rs.rank && c[static_cast<std::size_t>(i)] == (*box)[static_cast<std::size_t>(i)]) {
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == rs.rank) break;
    ++c[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Weight, Int> dominant_multiplicities(const RootSystemData& rs, const Weight& lambda) {
  if (!lambda.dominant())
    throw NotDominant("dominant_multiplicities needs a dominant weight, got " + rootsys::to_string(lambda));
  std::pair<std::string, Weight> key{rs.name(), lambda};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_dominant_mult_cache.find(key);
    if (it != g_dominant_mult_cache.end()) return it->second;
  }
  auto table = compute_dominant_multiplicities(rs, lambda);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_dominant_mult_cache.emplace(std::move(key), std::move(table)).first->second;
}

WeightMultiset freudenthal(const RootSystemData& rs, const Weight& lambda) {
  WeightMultiset out;
  for (const auto& [mu, mult] : dominant_multiplicities(rs, lambda))
    for (const Weight& w : weyl::orbit(rs, mu)) out[w] = mult;
  return out;
}

WeylCombo chi_of(const RootSystemData& rs, const Weight& mu) {
  auto res = weyl::dominant_representative_dot(rs, mu);
  WeylCombo combo;
  if (!res.singular) combo[res.dominant] = res.sign;
  return combo;
}

WeightMultiset combo_to_multiset(const RootSystemData& rs, const WeylCombo& combo) {
  WeightMultiset out;
  for (const auto& [lam, coeff] : combo) {
    if (coeff == 0) continue;
    for (const auto& [w, mult] : freudenthal(rs, lam)) {
      Int next = checked::mul_add(coeff, mult, out[w]);
      if (next == 0)
        out.erase(w);
      else
        out[w] = next;
    }
  }
  return out;
}

const Weight* max_support_weight(const RootSystemData& rs, const WeightMultiset& m) {
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    bool maximal = true;
    for (const auto& [other, mult] : m) {
      if (other == it->first) continue;
      if (rootsys::dominance_le(rs, it->first, other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) return &it->first;
  }
  return nullptr;
}

WeylCombo multiset_to_combo(const RootSystemData& rs, const WeightMultiset& m) {
  WeightMultiset rest;
  for (const auto& [w, mult] : m)
    if (mult != 0) rest[w] = mult;

  WeylCombo combo;
  std::set<Weight> peeled;
  while (!rest.empty()) {
    const Weight* top = max_support_weight(rs, rest);
    if (!top) throw NonTerminating("no dominance-maximal weight found");
    if (!top->dominant())
      throw NotWInvariant("maximal support weight " + rootsys::to_string(*top) + " is not dominant");
    Weight lam = *top;
    if (!peeled.insert(lam).second)
      throw NonTerminating("weight " + rootsys::to_string(lam) + " peeled twice");
    Int coeff = rest[lam];
    combo[lam] = coeff;
    for (const auto& [w, mult] : freudenthal(rs, lam)) {
      Int next = checked::sub(rest.count(w) ? rest[w] : 0, checked::mul(coeff, mult));
      if (next == 0)
        rest.erase(w);
      else
        rest[w] = next;
    }
  }
  for (auto it = combo.begin(); it != combo.end();)
    it = it->second == 0 ? combo.erase(it) : std::next(it);
  return combo;
}

WeightMultiset tensor(const RootSystemData& rs, const WeightMultiset& a, const WeightMultiset& b) {
  (void)rs;
  WeightMultiset out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight w = wa + wb;
      Int next = checked::mul_add(ma, mb, out.count(w) ? out[w] : 0);
      if (next == 0)
        out.erase(w);
      else
        out[w] = next;
    }
  return out;
}

WeightMultiset frobenius_twist(const RootSystemData& rs, const WeightMultiset& a, Int p, int r) {
  (void)rs;
  Int scale = checked::pow(p, r);
  WeightMultiset out;
  for (const auto& [w, mult] : a) out[scale * w] = mult;
  return out;
}

}  // namespace goodfilt::chars
