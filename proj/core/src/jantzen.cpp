#include "goodfilt/jantzen.hpp"

#include <memory>
#include <mutex>

namespace goodfilt::jantzen {

namespace {

std::mutex g_mutex;
std::map<std::string, std::unique_ptr<FactorRow>> g_row_cache;
std::map<std::string, WeylCombo> g_simple_cache;

std::string row_key(const RootSystemData& rs, Int p, const Weight& lambda) {
  return std::string(1, rootsys::type_char(rs.type_label)) + "/" + std::to_string(rs.rank) + "/" +
         std::to_string(p) + "/" + rootsys::to_string(lambda);
}

Bound scale(const Bound& b, Int a) {
  if (a >= 0) return {checked::mul(a, b.lo), checked::mul(a, b.hi)};
  return {checked::mul(a, b.hi), checked::mul(a, b.lo)};
}

Bound add(const Bound& a, const Bound& b) {
  return {checked::add(a.lo, b.lo), checked::add(a.hi, b.hi)};
}

FactorRow compute_row(const RootSystemData& rs, Int p, const Weight& lambda) {
  FactorRow row;
  row.jsf_combo = jsf(rs, p, lambda).combo;

  for (const auto& [nu, coeff] : row.jsf_combo) {
    if (nu == lambda || !rootsys::dominance_le(rs, nu, lambda))
      throw Error("internal: sum-formula support weight " + rootsys::to_string(nu) +
                  " is not strictly below " + rootsys::to_string(lambda));
    // chi(nu) expands as ch L(nu) + sum over the strictly smaller factors.
    const FactorRow& sub = factor_row(rs, p, nu);
    for (const auto& [mu, bound] : sub.factors) {
      Bound scaled = scale(bound, coeff);
      auto it = row.layer_sum.find(mu);
      if (it == row.layer_sum.end())
        row.layer_sum.emplace(mu, scaled);
      else
        it->second = add(it->second, scaled);
    }
  }

  for (auto it = row.layer_sum.begin(); it != row.layer_sum.end();) {
    Bound& b = it->second;
    if (b.hi < 0)
      throw Error("internal: negative multiplicity of L" + rootsys::to_string(it->first) +
                  " in the layer sum of " + rootsys::to_string(lambda));
    // The layer sum is a genuine character, so every multiplicity is >= 0.
    if (b.lo < 0) b.lo = 0;
    if (b.hi == 0) {
      it = row.layer_sum.erase(it);
      continue;
    }
    if (!b.point()) row.layer_sum_exact = false;
    ++it;
  }

  // A factor L(mu), mu != lambda, sits in the first layer, and the layers are
  // nested: a layer-sum count c forces [nabla(lambda):L(mu)] into
  // [min(c,1), c].
  for (const auto& [mu, c] : row.layer_sum) {
    Bound d{c.lo >= 1 ? Int{1} : Int{0}, c.hi};
    if (!d.point()) row.exact = false;
    row.factors.emplace(mu, d);
  }
  row.factors[lambda] = Bound{1, 1};
  return row;
}

}  // namespace

JsfOutput jsf(const RootSystemData& rs, Int p, const Weight& lambda) {
  if (!lambda.dominant()) throw NotDominant("jsf needs a dominant weight, got " + rootsys::to_string(lambda));
  if (!is_prime(p)) throw NotPrime("jsf needs a prime, got " + std::to_string(p));
  JsfOutput out;
  out.lambda = lambda;
  out.p = p;
  Weight shifted = lambda + rs.rho;
  for (const rootsys::Root& alpha : rs.positive_roots) {
    Int n = rootsys::pairing(rs, shifted, alpha);
    for (Int mp = p; mp < n; mp += p) {
      Int val = padic_valuation(p, mp);
      Weight arg = lambda;
      Int drop = checked::sub(n, mp);
      for (int i = 0; i < rs.rank; ++i)
        arg[i] = checked::sub(arg[i], checked::mul(drop, alpha.omega_coords[i]));
      for (const auto& [dom, sign] : chars::chi_of(rs, arg)) {
        Int next = checked::mul_add(val, sign, out.combo.count(dom) ? out.combo[dom] : 0);
        if (next == 0)
          out.combo.erase(dom);
        else
          out.combo[dom] = next;
      }
    }
  }
  return out;
}

bool is_simple_nabla(const RootSystemData& rs, Int p, const Weight& lambda) {
  return jsf(rs, p, lambda).combo.empty();
}

const FactorRow& factor_row(const RootSystemData& rs, Int p, const Weight& lambda) {
  std::string key = row_key(rs, p, lambda);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_row_cache.find(key);
    if (it != g_row_cache.end()) return *it->second;
  }
  auto computed = std::make_unique<FactorRow>(compute_row(rs, p, lambda));
  std::lock_guard<std::mutex> lock(g_mutex);
  auto [it, inserted] = g_row_cache.emplace(std::move(key), std::move(computed));
  return *it->second;
}

FactorMap composition_factors(const RootSystemData& rs, Int p, const Weight& lambda) {
  const FactorRow& row = factor_row(rs, p, lambda);
  FactorMap fm;
  fm.exact = row.exact;
  for (const auto& [mu, bound] : row.factors)
    if (bound.hi > 0) fm.factors[mu] = bound.hi;
  return fm;
}

WeylCombo simple_char(const RootSystemData& rs, Int p, const Weight& lambda) {
  std::string key = simple_char_cache_key(rs, p, lambda);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_simple_cache.find(key);
    if (it != g_simple_cache.end()) return it->second;
  }
  const FactorRow& row = factor_row(rs, p, lambda);
  WeylCombo result;
  result[lambda] = 1;
  for (const auto& [mu, bound] : row.factors) {
    if (mu == lambda || bound.hi == 0) continue;
    if (!bound.point())
      throw Ambiguous("multiplicity of L" + rootsys::to_string(mu) + " in nabla" +
                      rootsys::to_string(lambda) + " only bounded to [" + std::to_string(bound.lo) +
                      "," + std::to_string(bound.hi) + "]");
    for (const auto& [nu, coeff] : simple_char(rs, p, mu)) {
      Int next = checked::sub(result.count(nu) ? result[nu] : 0, checked::mul(bound.lo, coeff));
      if (next == 0)
        result.erase(nu);
      else
        result[nu] = next;
    }
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_simple_cache.emplace(std::move(key), std::move(result)).first->second;
}

Int jsf_support_pairing_bound(const RootSystemData& rs, Int p, const Weight& lambda) {
  const FactorRow& row = factor_row(rs, p, lambda);
  if (row.jsf_combo.empty())
    throw SimpleModule("nabla" + rootsys::to_string(lambda) + " is simple at p=" + std::to_string(p));
  Int best = 0;
  bool first = true;
  auto consider = [&](const Weight& mu) {
    Int v = rootsys::pairing(rs, mu, rs.alpha0());
    if (first || v > best) best = v;
    first = false;
  };
  if (row.layer_sum_exact) {
    for (const auto& [mu, bound] : row.layer_sum) consider(mu);
  } else {
    for (const auto& [mu, coeff] : row.jsf_combo) consider(mu);
  }
  if (first) throw Error("internal: nonzero sum formula with empty support");
  return best;
}

std::string simple_char_cache_key(const RootSystemData& rs, Int p, const Weight& lambda) {
  return row_key(rs, p, lambda);
}

std::map<std::string, WeylCombo> simple_char_cache_snapshot() {
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_simple_cache;
}

void simple_char_cache_insert(const std::string& key, const WeylCombo& value) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_simple_cache.emplace(key, value);
}

void clear_caches() {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_row_cache.clear();
  g_simple_cache.clear();
}

}  // namespace goodfilt::jantzen
