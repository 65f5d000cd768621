#pragma once

// Matrix representations of the Poincare algebra sl2 x sl2 |x p-: quotients
// P(V0)/I, component graphs, intertwiners, equivalence and
// indecomposability, and the two-source / two-sink family.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/ideal.hpp"
#include "poincare/linalg.hpp"
#include "poincare/parallel.hpp"
#include "poincare/poly.hpp"
#include "poincare/sl2.hpp"

namespace poincare {

inline constexpr int kDefaultDegreeCap = 16;

struct QuotientModule {
  IrrepLabel source;
  std::vector<VPoly> gens;
  int degree_cap = kDefaultDegreeCap;
  std::map<int, Subspace> ideal_per_degree;  // up to and including saturation
  int saturation = 0;                        // first degree where the ideal is everything
  /// Coset representatives: (degree, coordinate) of unit vectors, ordered
  /// by degree then coordinate.
  std::vector<std::pair<int, std::size_t>> basis;

  std::size_t dim() const { return basis.size(); }
  VPoly representative(std::size_t i) const;
};

/// gens must be nonzero and homogeneous with target == source. Throws
/// NotFiniteDimensional if no degree <= degree_cap is entirely inside
/// the ideal.
QuotientModule build_quotient(IrrepLabel source, const std::vector<VPoly>& gens, int degree_cap = kDefaultDegreeCap);

struct RepMatrices {
  std::size_t dim = 0;
  std::array<Matrix, 4> p_minus;  // multiplication by z1..z4
  std::array<Matrix, 6> g0;       // indexed by Gen
  std::vector<int> grading;       // per basis vector; empty if unknown
  /// Super case only: w1^1, w1^2, w2^1, w2^2.
  std::optional<std::array<Matrix, 4>> odd;

  const Matrix& operator[](Gen g) const { return g0[static_cast<int>(g)]; }
  /// Every generator matrix, in a fixed order.
  std::vector<const Matrix*> generators() const;
  static RepMatrices zero(std::size_t n);
};

RepMatrices rep_matrices(const QuotientModule& q);

/// [p,p'] = 0, the sl2 x sl2 relations, [g0, p-] matching the derivation
/// action, and nilpotency of every p- matrix. Odd matrices are ignored here.
bool verify_lie_relations(const RepMatrices& m);

struct ComponentNode {
  int grade = 0;
  IrrepLabel label;
  std::size_t multiplicity = 0;
};

struct ComponentArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t count = 0;
};

struct ComponentGraph {
  std::vector<ComponentNode> nodes;  // by grade, then label
  std::vector<ComponentArrow> arrows;

  bool is_acyclic() const;
  std::vector<std::size_t> sources() const;
  std::vector<std::size_t> sinks() const;
};

/// Needs a grading preserved by g0. Nodes are the isotypic components of
/// each grade; the arrow count from i to j is the dimension of the
/// projection of p- X_i onto X_j divided by dim(label_j).
ComponentGraph component_graph(const RepMatrices& m);
ComponentGraph component_graph(const QuotientModule& q);

/// The graph obtained by reversing every arrow (and negating grades),
/// re-sorted into canonical node order.
ComponentGraph reversed(const ComponentGraph& g);

/// x -> -x^T on every generator; grades are negated.
RepMatrices dualize(const RepMatrices& m);

RepMatrices direct_sum(const RepMatrices& a, const RepMatrices& b);
/// x -> P x P^{-1}. The grading is dropped.
RepMatrices conjugate(const RepMatrices& m, const Matrix& p);

/// All T (dim b x dim a) with T a(x) = b(x) T for every generator,
/// flattened row-major (index i * dim a + j).
Subspace hom_space(const RepMatrices& a, const RepMatrices& b);
std::vector<Matrix> hom_basis(const RepMatrices& a, const RepMatrices& b);

struct EquivalenceReport {
  bool equivalent = false;
  std::string reason;
  std::optional<Matrix> intertwiner;  // invertible witness
  std::size_t points_tried = 0;
};

/// Decides whether hom(a, b) has an invertible element: after cheap
/// necessary checks, det(sum c_i T_i) is evaluated on the lattice points
/// c in N^m with |c| <= dim, which no nonzero polynomial of that degree
/// can vanish on entirely.
EquivalenceReport equivalence(const RepMatrices& a, const RepMatrices& b, Exec exec = Exec::Parallel);
bool are_equivalent(const RepMatrices& a, const RepMatrices& b);

/// An element sum c_i basis[i] of rank >= `rank`, searching the same
/// lattice as equivalence (|c| <= rank); nullopt if none exists.
std::optional<Matrix> element_of_rank(const std::vector<Matrix>& basis, std::size_t rank, Exec exec = Exec::Parallel);

struct IndecomposabilityReport {
  std::size_t commutant_dim = 0;
  std::size_t radical_dim = 0;
  bool quotient_commutative = true;  // A/J
  bool indecomposable() const { return commutant_dim - radical_dim == 1; }
};

/// Commutant A, its trace-form radical J; indecomposable iff dim A/J = 1.
IndecomposabilityReport indecomposability(const RepMatrices& m);
bool is_indecomposable(const RepMatrices& m);

/// The explicit 6x6 realization: constant -> z_i, z_i -> the det class via
/// the row (p4, -p3, -p2, p1); g0 acts on the middle block by the
/// derivation action on degree-one polynomials.
RepMatrices explicit_six_dim();

/// The p- action from V0 = source into the copy of `sink` inside
/// p- (x) source, in the standard bases of both.
std::array<Matrix, 4> degree_one_projection(IrrepLabel source, IrrepLabel sink);

struct FamilySpec {
  IrrepLabel source1;
  IrrepLabel source2;
  IrrepLabel sink2;
  IrrepLabel sink3;
  std::array<Rational, 4> params;  // alpha, beta, gamma, delta
};

/// Blocks S1, S2, T2, T3; p_k has alpha F1, beta F2 in the T2 rows and
/// gamma G1, delta G2 in the T3 rows. Grades: sources 0, sinks 1.
RepMatrices build_family(const FamilySpec& f);
bool family_equivalence(const FamilySpec& f1, const FamilySpec& f2);

struct SweepEntry {
  std::vector<IrrepLabel> kept;  // degree-one components that survive
  std::size_t dim = 0;
  bool indecomposable = false;
  bool relations_ok = false;
};

/// Quotients of P(V0) by everything of degree two and by the degree-one
/// components not in `kept`, for every nonempty kept set.
std::vector<SweepEntry> first_order_sweep(IrrepLabel v0, Exec exec = Exec::Parallel);

nlohmann::json to_json(const RepMatrices& m);
RepMatrices rep_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ComponentGraph& g);
/// Nodes in spin notation, "×n" for multiplicities above one; arrows
/// labeled with counts above one.
std::string to_dot(const ComponentGraph& g);

}  // namespace poincare
