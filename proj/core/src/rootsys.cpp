#include "goodfilt/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace goodfilt::rootsys {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size())
    throw DimensionMismatch("weight rank mismatch: " + std::to_string(a.coords.size()) + " vs " +
                            std::to_string(b.coords.size()));
}

/* Exact rational scalar used only while inverting the Cartan matrix. */
struct Rat {
  Int num = 0;
  Int den = 1;

  static Rat of(Int n, Int d = 1) {
    Rat r{n, d};
    r.normalize();
    return r;
  }
  void normalize() {
    if (den < 0) {
      num = checked::neg(num);
      den = checked::neg(den);
    }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
};

Rat operator*(const Rat& a, const Rat& b) { return Rat::of(checked::mul(a.num, b.num), checked::mul(a.den, b.den)); }
Rat operator-(const Rat& a, const Rat& b) {
  Int n = checked::sub(checked::mul(a.num, b.den), checked::mul(b.num, a.den));
  return Rat::of(n, checked::mul(a.den, b.den));
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw Error("rational division by zero");
  return Rat::of(checked::mul(a.num, b.den), checked::mul(a.den, b.num));
}

// Gauss-Jordan inverse over exact rationals.  Cartan matrices are tiny and
// well conditioned in the rationals, so this is plenty.
void invert_cartan(RootSystemData& rs) {
  const int n = rs.rank;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat::of(rs.cartan[i][j]);
    m[i][n + i] = Rat::of(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col].num != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("Cartan matrix is singular");
    std::swap(m[col], m[piv]);
    Rat lead = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] = m[col][j] / lead;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].num == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  Int lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lcm = checked::mul(lcm / std::gcd(lcm, m[i][n + j].den), m[i][n + j].den);
  rs.cartan_det = lcm;
  rs.cartan_inv_scaled.assign(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& e = m[i][n + j];
      rs.cartan_inv_scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          checked::mul(e.num, lcm / e.den);
    }
}

// cartan[i][j] = <alpha_j, alpha_i^vee> in Bourbaki numbering.
std::vector<std::vector<Int>> cartan_matrix(TypeLabel type, int n) {
  auto chain = [&](int size) {
    std::vector<std::vector<Int>> c(static_cast<std::size_t>(size), std::vector<Int>(static_cast<std::size_t>(size), 0));
    for (int i = 0; i < size; ++i) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      if (i + 1 < size) {
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
        c[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
      }
    }
    return c;
  };
  switch (type) {
    case TypeLabel::A: {
      if (n < 1) throw UnsupportedType("type A needs rank >= 1");
      return chain(n);
    }
    case TypeLabel::B: {
      // alpha_n is the short simple root.
      if (n < 2) throw UnsupportedType("type B needs rank >= 2");
      auto c = chain(n);
      c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
      return c;
    }
    case TypeLabel::C: {
      // alpha_n is the long simple root.
      if (n < 2) throw UnsupportedType("type C needs rank >= 2");
      auto c = chain(n);
      c[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
      return c;
    }
    case TypeLabel::D: {
      if (n < 4) throw UnsupportedType("type D needs rank >= 4");
      auto c = chain(n - 1);
      c.resize(static_cast<std::size_t>(n));
      for (auto& row : c) row.resize(static_cast<std::size_t>(n), 0);
      c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = 2;
      // alpha_n hangs off alpha_{n-2}.
      c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 3)] = -1;
      c[static_cast<std::size_t>(n - 3)][static_cast<std::size_t>(n - 1)] = -1;
      return c;
    }
    case TypeLabel::G: {
      if (n != 2) throw UnsupportedType("type G needs rank == 2");
      // alpha_1 short, alpha_2 long.
      return {{2, -3}, {-1, 2}};
    }
  }
  throw UnsupportedType("unknown type label");
}

std::vector<Int> simple_half_norms(TypeLabel type, int n) {
  std::vector<Int> d(static_cast<std::size_t>(n), 1);
  switch (type) {
    case TypeLabel::B:
      for (int i = 0; i < n - 1; ++i) d[static_cast<std::size_t>(i)] = 2;
      break;
    case TypeLabel::C:
      d[static_cast<std::size_t>(n - 1)] = 2;
      break;
    case TypeLabel::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

Int saturating_weyl_order(TypeLabel type, int n, bool* exact) {
  *exact = true;
  auto mul_sat = [&](Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
      *exact = false;
      return std::numeric_limits<Int>::max();
    }
    return r;
  };
  Int order = 1;
  switch (type) {
    case TypeLabel::A:
      for (Int k = 2; k <= n + 1; ++k) order = mul_sat(order, k);
      break;
    case TypeLabel::B:
    case TypeLabel::C:
      for (Int k = 2; k <= n; ++k) order = mul_sat(order, k);
      for (int i = 0; i < n; ++i) order = mul_sat(order, 2);
      break;
    case TypeLabel::D:
      for (Int k = 2; k <= n; ++k) order = mul_sat(order, k);
      for (int i = 0; i < n - 1; ++i) order = mul_sat(order, 2);
      break;
    case TypeLabel::G:
      order = 12;
      break;
  }
  return order;
}

Int height(const std::vector<Int>& coeffs) {
  Int h = 0;
  for (Int c : coeffs) h = checked::add(h, c);
  return h;
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked::add(r.coords[i], b.coords[i]);
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked::sub(r.coords[i], b.coords[i]);
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = checked::neg(c);
  return r;
}

Weight operator*(Int scalar, const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = checked::mul(scalar, c);
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) os << ',';
    os << w.coords[i];
  }
  os << ')';
  return os.str();
}

bool is_restricted(const Weight& w, Int p, int r) {
  Int bound = checked::pow(p, r);
  for (Int c : w.coords)
    if (c < 0 || c >= bound) return false;
  return true;
}

std::pair<Weight, Weight> digit_split(const Weight& w, Int p, int r) {
  if (!w.dominant()) throw NotDominant("digit_split needs a dominant weight, got " + to_string(w));
  Int q = checked::pow(p, r);
  Weight lo = w, hi = w;
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    lo.coords[i] = w.coords[i] % q;
    hi.coords[i] = w.coords[i] / q;
  }
  return {lo, hi};
}

char type_char(TypeLabel t) {
  switch (t) {
    case TypeLabel::A: return 'A';
    case TypeLabel::B: return 'B';
    case TypeLabel::C: return 'C';
    case TypeLabel::D: return 'D';
    case TypeLabel::G: return 'G';
  }
  return '?';
}

TypeLabel type_from_char(char c) {
  switch (c) {
    case 'A': return TypeLabel::A;
    case 'B': return TypeLabel::B;
    case 'C': return TypeLabel::C;
    case 'D': return TypeLabel::D;
    case 'G': return TypeLabel::G;
    default: throw UnsupportedType(std::string("unsupported type label '") + c + "'");
  }
}

std::string RootSystemData::name() const { return std::string(1, type_char(type_label)) + std::to_string(rank); }

Weight omega_coords_of(const RootSystemData& rs, const std::vector<Int>& simple_coeffs) {
  Weight w = Weight::zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Int acc = 0;
    for (int j = 0; j < rs.rank; ++j)
      acc = checked::mul_add(rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             simple_coeffs[static_cast<std::size_t>(j)], acc);
    w[i] = acc;
  }
  return w;
}

RootSystemData build(TypeLabel type, int rank) {
  RootSystemData rs;
  rs.type_label = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  rs.simple_half_norms = simple_half_norms(type, rank);
  invert_cartan(rs);

  const int n = rank;
  // Close the simple roots under all simple reflections; in simple-root
  // coordinates, s_i(m) = m - (C m)_i e_i.
  std::set<std::vector<Int>> all;
  std::vector<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<Int> m = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      Int pair_i = 0;
      for (int j = 0; j < n; ++j)
        pair_i = checked::mul_add(rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                  m[static_cast<std::size_t>(j)], pair_i);
      std::vector<Int> next = m;
      next[static_cast<std::size_t>(i)] = checked::sub(next[static_cast<std::size_t>(i)], pair_i);
      if (all.insert(next).second) queue.push_back(next);
    }
  }

  std::vector<std::vector<Int>> positives;
  for (const auto& m : all) {
    bool nonneg = true;
    bool nonzero = false;
    for (Int c : m) {
      if (c < 0) nonneg = false;
      if (c != 0) nonzero = true;
    }
    if (nonneg && nonzero) positives.push_back(m);
  }
  std::sort(positives.begin(), positives.end(), [&](const auto& a, const auto& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  // Height ties break descending-lex so the height-1 block is e_0, e_1, ...,
  // keeping positive_roots[i] = alpha_i for i < rank.  Callers rely on that.

  Int max_half_norm = 1;
  for (Int d : rs.simple_half_norms) max_half_norm = std::max(max_half_norm, d);

  for (const auto& m : positives) {
    Root root;
    root.simple_coeffs = m;
    // (beta, beta)/2 via (alpha_i, alpha_j) = d_i * cartan[i][j].
    Int norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int term = checked::mul(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
        term = checked::mul(term, checked::mul(rs.simple_half_norms[static_cast<std::size_t>(i)],
                                               rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        norm2 = checked::add(norm2, term);
      }
    if (norm2 % 2 != 0) throw Error("internal: odd root norm");
    root.half_norm = norm2 / 2;
    root.length_class = (root.half_norm == max_half_norm && max_half_norm > 1) ? LengthClass::Long : LengthClass::Short;
    root.coroot_coeffs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Int num = checked::mul(m[static_cast<std::size_t>(i)], rs.simple_half_norms[static_cast<std::size_t>(i)]);
      if (num % root.half_norm != 0) throw Error("internal: non-integral coroot coefficient");
      root.coroot_coeffs[static_cast<std::size_t>(i)] = num / root.half_norm;
    }
    root.omega_coords = omega_coords_of(rs, m);
    rs.positive_roots.push_back(std::move(root));
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.positive_roots[static_cast<std::size_t>(i)].simple_coeffs[static_cast<std::size_t>(j)] !=
          (i == j ? 1 : 0))
        throw Error("internal: positive_roots[i] != alpha_i");

  // The highest short root is the unique dominant root of minimal length.
  bool found = false;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const Root& r = rs.positive_roots[k];
    if (r.half_norm == 1 && r.omega_coords.dominant()) {
      if (found) throw Error("internal: highest short root is not unique");
      rs.alpha0_index = k;
      found = true;
    }
  }
  if (!found) throw Error("internal: no dominant short root");

  rs.rho = Weight(std::vector<Int>(static_cast<std::size_t>(n), 1));
  rs.coxeter_h = checked::add(pairing(rs, rs.rho, rs.alpha0()), 1);
  rs.weyl_order = saturating_weyl_order(type, n, &rs.weyl_order_exact);

  if (static_cast<Int>(rs.positive_roots.size()) * 2 != checked::mul(static_cast<Int>(n), rs.coxeter_h))
    throw Error("internal: |R+| != rank*h/2 for " + rs.name());
  return rs;
}

Int pairing(const RootSystemData& rs, const Weight& w, const Root& alpha) {
  if (w.rank() != rs.rank) throw DimensionMismatch("weight rank does not match root system rank");
  Int acc = 0;
  for (int i = 0; i < rs.rank; ++i)
    acc = checked::mul_add(alpha.coroot_coeffs[static_cast<std::size_t>(i)], w[i], acc);
  return acc;
}

std::optional<std::vector<Int>> root_lattice_member(const RootSystemData& rs, const Weight& v) {
  if (v.rank() != rs.rank) throw DimensionMismatch("weight rank does not match root system rank");
  std::vector<Int> out(static_cast<std::size_t>(rs.rank));
  for (int i = 0; i < rs.rank; ++i) {
    Int acc = 0;
    for (int j = 0; j < rs.rank; ++j)
      acc = checked::mul_add(rs.cartan_inv_scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], v[j], acc);
    if (acc % rs.cartan_det != 0) return std::nullopt;
    out[static_cast<std::size_t>(i)] = acc / rs.cartan_det;
  }
  return out;
}

std::optional<std::vector<Int>> dominance_leq(const RootSystemData& rs, const Weight& mu, const Weight& lambda) {
  auto coeffs = root_lattice_member(rs, lambda - mu);
  if (!coeffs) return std::nullopt;
  for (Int c : *coeffs)
    if (c < 0) return std::nullopt;
  return coeffs;
}

bool dominance_le(const RootSystemData& rs, const Weight& mu, const Weight& lambda) {
  return dominance_leq(rs, mu, lambda).has_value();
}

}  // namespace goodfilt::rootsys
