#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goodfilt/checked.hpp"
#include "goodfilt/errors.hpp"

namespace goodfilt::rootsys {

using goodfilt::Int;

// A weight written in the basis of fundamental weights: coords[i] = <w, alpha_i^vee>.
struct Weight {
  std::vector<Int> coords;

  Weight() = default;
  explicit Weight(std::vector<Int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Int> c) : coords(c) {}

  static Weight zero(int rank) { return Weight(std::vector<Int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  Int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  bool dominant() const {
    for (Int c : coords)
      if (c < 0) return false;
    return true;
  }

  auto operator<=>(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(Int scalar, const Weight& a);
std::string to_string(const Weight& w);

// coords in [0, p^r - 1] in every slot.
bool is_restricted(const Weight& w, Int p, int r);

// w = first + p^r * second, coordinate-wise, with first restricted.
// Requires w dominant.
std::pair<Weight, Weight> digit_split(const Weight& w, Int p, int r);

enum class LengthClass { Short, Long };

// A positive root, carried in three forms at once: expansion in simple roots,
// expansion of its coroot in simple coroots (so pairing is a dot product with
// fundamental-weight coordinates), and its own fundamental-weight coordinates.
struct Root {
  std::vector<Int> simple_coeffs;
  std::vector<Int> coroot_coeffs;
  Weight omega_coords;
  Int half_norm = 1;  // (alpha, alpha)/2 with short roots normalised to 1
  LengthClass length_class = LengthClass::Short;
};

enum class TypeLabel { A, B, C, D, G };

char type_char(TypeLabel t);
TypeLabel type_from_char(char c);

struct RootSystemData {
  TypeLabel type_label = TypeLabel::A;
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<Int>> cartan;
  // cartan_inv_scaled / cartan_det = inverse of the Cartan matrix, exactly.
  std::vector<std::vector<Int>> cartan_inv_scaled;
  Int cartan_det = 1;
  std::vector<Int> simple_half_norms;  // d_i = (alpha_i, alpha_i)/2
  std::vector<Root> positive_roots;    // simple roots first, then by height
  std::size_t alpha0_index = 0;        // highest short root
  Weight rho;
  Int coxeter_h = 0;
  Int weyl_order = 0;           // saturated at INT64_MAX for huge ranks
  bool weyl_order_exact = true;

  const Root& alpha0() const { return positive_roots[alpha0_index]; }
  std::string name() const;  // e.g. "A3"
};

// Builds the root system from its Cartan matrix.  Supported: A(n>=1), B(n>=2),
// C(n>=2), D(n>=4), G(n==2); everything else throws UnsupportedType.
RootSystemData build(TypeLabel type, int rank);

// <w, alpha^vee>, exact.
Int pairing(const RootSystemData& rs, const Weight& w, const Root& alpha);

// If lambda - mu is a non-negative integer combination of simple roots,
// returns its coefficient vector; otherwise nullopt.
std::optional<std::vector<Int>> dominance_leq(const RootSystemData& rs, const Weight& mu,
                                              const Weight& lambda);
bool dominance_le(const RootSystemData& rs, const Weight& mu, const Weight& lambda);

// Integer simple-root coefficients of v if v lies in the root lattice.
std::optional<std::vector<Int>> root_lattice_member(const RootSystemData& rs, const Weight& v);

// Fundamental-weight coordinates of a simple-root-coefficient vector.
Weight omega_coords_of(const RootSystemData& rs, const std::vector<Int>& simple_coeffs);

}  // namespace goodfilt::rootsys
