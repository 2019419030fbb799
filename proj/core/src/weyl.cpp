#include "goodfilt/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace goodfilt::weyl {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix identity_matrix(int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Int aik = a[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] = checked::mul_add(aik, b[k][j], out[i][j]);
    }
  return out;
}

Weight apply(const Matrix& m, const Weight& w) {
  const int n = static_cast<int>(m.size());
  if (w.rank() != n) throw DimensionMismatch("weight rank does not match Weyl element rank");
  Weight out = Weight::zero(n);
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j)
      acc = checked::mul_add(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], w[j], acc);
    out[i] = acc;
  }
  return out;
}

// s_i on simple-root coefficient vectors: m -> m - (C m)_i e_i.
void reflect_root_coords(const RootSystemData& rs, int i, std::vector<Int>& m) {
  Int pair_i = 0;
  for (int j = 0; j < rs.rank; ++j)
    pair_i = checked::mul_add(rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                              m[static_cast<std::size_t>(j)], pair_i);
  m[static_cast<std::size_t>(i)] = checked::sub(m[static_cast<std::size_t>(i)], pair_i);
}

// s_i on fundamental-weight coordinates: w -> w - w_i * omega_coords(alpha_i).
void reflect_omega_coords(const RootSystemData& rs, int i, Weight& w) {
  Int wi = w[i];
  if (wi == 0) return;
  const Weight& alpha = rs.positive_roots[static_cast<std::size_t>(i)].omega_coords;
  for (int j = 0; j < rs.rank; ++j) w[j] = checked::sub(w[j], checked::mul(wi, alpha[j]));
}

}  // namespace

std::vector<std::vector<Int>> simple_reflection_matrix(const RootSystemData& rs, int i) {
  Matrix m = identity_matrix(rs.rank);
  // Column action: (S_i w)_j = w_j - w_i * <alpha_i, alpha_j^vee>.
  const Weight& alpha = rs.positive_roots[static_cast<std::size_t>(i)].omega_coords;
  for (int j = 0; j < rs.rank; ++j)
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
        checked::sub(m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], alpha[j]);
  return m;
}

WeylGroup enumerate(const RootSystemData& rs, Int cap) {
  if (rs.weyl_order > cap) throw GroupTooLarge("Weyl group of " + rs.name() + " has order " +
                                               (rs.weyl_order_exact ? std::to_string(rs.weyl_order) : std::string("> 2^63")) +
                                               ", cap is " + std::to_string(cap));
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(rs.rank));
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_matrix(rs, i));

  WeylGroup group;
  std::map<Matrix, std::size_t> seen;
  WeylElement id;
  id.matrix = identity_matrix(rs.rank);
  id.sign = 1;
  seen.emplace(id.matrix, 0);
  group.elements.push_back(std::move(id));

  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (int i = 0; i < rs.rank; ++i) {
      Matrix next = multiply(group.elements[head].matrix, gens[static_cast<std::size_t>(i)]);
      if (seen.count(next)) continue;
      if (static_cast<Int>(group.elements.size()) >= cap)
        throw GroupTooLarge("Weyl group enumeration exceeded cap " + std::to_string(cap));
      WeylElement e;
      e.word = group.elements[head].word;
      e.word.push_back(i);
      e.sign = -group.elements[head].sign;
      e.matrix = next;
      seen.emplace(std::move(next), group.elements.size());
      group.elements.push_back(std::move(e));
    }
  }
  if (rs.weyl_order_exact && static_cast<Int>(group.elements.size()) != rs.weyl_order)
    throw Error("internal: enumerated " + std::to_string(group.elements.size()) +
                " Weyl elements, expected " + std::to_string(rs.weyl_order));
  return group;
}

Weight act(const RootSystemData& rs, const WeylElement& w, const Weight& lambda) {
  if (lambda.rank() != rs.rank) throw DimensionMismatch("weight rank does not match root system rank");
  return apply(w.matrix, lambda);
}

Weight dot_act(const RootSystemData& rs, const WeylElement& w, const Weight& lambda) {
  return act(rs, w, lambda + rs.rho) - rs.rho;
}

std::vector<std::size_t> inversion_set(const RootSystemData& rs, const WeylElement& w) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    // w^{-1} = reversed word; operators apply right-to-left, so walk the
    // word of w front to back.
    std::vector<Int> m = rs.positive_roots[k].simple_coeffs;
    for (int i : w.word) reflect_root_coords(rs, i, m);
    bool negative = false;
    for (Int c : m) {
      if (c < 0) negative = true;
      if (c > 0) {
        negative = false;
        break;
      }
    }
    if (negative) out.push_back(k);
  }
  return out;
}

std::vector<std::pair<const WeylElement*, Weight>> w_dot_zero_set(const RootSystemData& rs,
                                                                  const WeylGroup& group) {
  std::vector<std::pair<const WeylElement*, Weight>> out;
  out.reserve(group.elements.size());
  for (const WeylElement& w : group.elements) {
    Weight direct = dot_act(rs, w, Weight::zero(rs.rank));
    Weight via_roots = Weight::zero(rs.rank);
    for (std::size_t k : inversion_set(rs, w))
      via_roots = via_roots - rs.positive_roots[k].omega_coords;
    if (direct != via_roots)
      throw Error("internal: w.0 mismatch between dot action and inversion-set sum");
    out.emplace_back(&w, direct);
  }
  return out;
}

DotDominantResult dominant_representative_dot(const RootSystemData& rs, const Weight& mu) {
  if (mu.rank() != rs.rank) throw DimensionMismatch("weight rank does not match root system rank");
  DotDominantResult res;
  Weight nu = mu + rs.rho;
  for (;;) {
    int neg = -1;
    bool zero = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (nu[i] < 0) {
        neg = i;
        break;
      }
      if (nu[i] == 0) zero = true;
    }
    if (neg < 0) {
      if (zero) {
        res.singular = true;
        return res;
      }
      res.dominant = nu - rs.rho;
      return res;
    }
    reflect_omega_coords(rs, neg, nu);
    res.sign = -res.sign;
    res.witness.push_back(neg);
  }
}

bool linked_to_zero(const RootSystemData& rs, const WeylGroup& group, const Weight& sigma, Int p) {
  for (const WeylElement& w : group.elements) {
    Weight diff = sigma - dot_act(rs, w, Weight::zero(rs.rank));
    auto coeffs = rootsys::root_lattice_member(rs, diff);
    if (!coeffs) continue;
    bool divisible = true;
    for (Int c : *coeffs)
      if (c % p != 0) {
        divisible = false;
        break;
      }
    if (divisible) return true;
  }
  return false;
}

bool linked_to_zero(const RootSystemData& rs, Int p, const Weight& sigma) {
  return linked_to_zero(rs, enumerate(rs), sigma, p);
}

Weight dominant_representative(const RootSystemData& rs, const Weight& w) {
  Weight v = w;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    reflect_omega_coords(rs, neg, v);
  }
}

std::vector<Weight> orbit(const RootSystemData& rs, const Weight& w) {
  std::set<Weight> seen;
  std::deque<Weight> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight next = cur;
      reflect_omega_coords(rs, i, next);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

}  // namespace goodfilt::weyl
