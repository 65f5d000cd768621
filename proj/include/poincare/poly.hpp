#pragma once

// The polynomial model C[z1..z4] of U(p-), V0-valued polynomials, the g0
// derivation action and the [r,s] component decomposition.
//
// Coordinates: degree-d scalar polynomials use the graded-lex order
// (z1 > z2 > z3 > z4, larger exponents first); a V0-valued polynomial puts
// monomial m, value component c at index mono_index(m) * dim(V0) + c.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "poincare/linalg.hpp"
#include "poincare/sl2.hpp"

namespace poincare {

using Monomial = std::array<int, 4>;

int degree(const Monomial& m);
std::size_t monomial_count(int d);  // C(d+3, 3)
std::size_t mono_index(const Monomial& m);
/// All monomials of degree d in coordinate order.
const std::vector<Monomial>& monomials(int d);

/// H_L, H_R eigenvalues; not necessarily a dominant label.
struct Weight {
  int l = 0;
  int r = 0;
  auto operator<=>(const Weight&) const = default;
};

Weight mono_weight(const Monomial& m);

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;  // a before b
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly monomial(const Monomial& m, const Rational& c = 1);
  static Poly z(int i);  // i in 1..4
  static Poly det();     // z1 z4 - z2 z3

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  /// -1 for the zero polynomial, else max degree; homogeneous() tells
  /// whether every term has that degree.
  int degree() const;
  bool homogeneous() const;
  Poly pow(int k) const;

  friend Poly operator+(Poly a, const Poly& b);
  friend Poly operator-(Poly a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

std::string to_string(const Poly& p);
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// V0-valued polynomial: components[c] multiplies the basis vector v_c of V0.
struct VPoly {
  IrrepLabel target;
  std::vector<Poly> components;

  static VPoly zero(IrrepLabel target);
  /// p (x) v_c.
  static VPoly scalar_times(const Poly& p, IrrepLabel target, std::size_t c);
  bool is_zero() const;
  int degree() const;
  friend bool operator==(const VPoly& a, const VPoly& b) {
    return a.target == b.target && a.components == b.components;
  }
};

Poly act_generator(Gen g, const Poly& p);
VPoly act_generator_v(Gen g, const VPoly& p);

// --- coordinates ----------------------------------------------------------

std::size_t space_dim(int d, IrrepLabel target);
SparseVec coords(const VPoly& p, int d);
SparseVec coords(const Poly& p, int d);
VPoly vpoly_from_coords(const SparseVec& v, int d, IrrepLabel target);
Poly poly_from_coords(const SparseVec& v, int d);
Weight coord_weight(std::size_t index, int d, IrrepLabel target);

/// Action of g on the degree-d space (square). Cached; thread safe.
const Matrix& g0_matrix(Gen g, int d, IrrepLabel target);
/// Multiplication by z_{var+1} from degree d to degree d+1. Cached.
const Matrix& mult_matrix(int var, int d, IrrepLabel target);

/// The g0-submodule generated by the given degree-d vectors.
Subspace g0_closure(const std::vector<SparseVec>& vectors, int d, IrrepLabel target);

struct HighestWeightVector {
  IrrepLabel weight;
  SparseVec vector;
};

/// Basis of ker E_L cap ker E_R inside a g0-invariant subspace of the
/// degree-d space, sorted by weight then by canonical order. Throws
/// NotInvariant if the space is not g0-stable.
std::vector<HighestWeightVector> highest_weight_vectors(const Subspace& space, int d, IrrepLabel target);

// --- components [r,s] -------------------------------------------------------

struct ComponentLabel {
  int r = 0;
  int s = 0;
  int degree() const { return r + 2 * s; }
  std::size_t dim() const { return static_cast<std::size_t>((r + 1) * (r + 1)); }
  auto operator<=>(const ComponentLabel&) const = default;
};

/// z1^r det^s.
Poly component_hw(ComponentLabel c);
Subspace component_span(ComponentLabel c);
/// All [r,s] with r + 2s = d, by decreasing r.
std::vector<ComponentLabel> degree_components(int d);

inline void to_json(nlohmann::json& j, const ComponentLabel& c) { j = nlohmann::json::array({c.r, c.s}); }
inline void from_json(const nlohmann::json& j, ComponentLabel& c) {
  c.r = j.at(0).get<int>();
  c.s = j.at(1).get<int>();
}

}  // namespace poincare
