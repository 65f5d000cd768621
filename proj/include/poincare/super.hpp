#pragma once

// The simplest super Poincare algebra: odd generators w1^j (in M(1,2)) and
// w2^i (in M(2,1)) with {w2^i, w1^j} = z_ij, PBW normal ordering, the nine
// odd spaces of U(n_super), and the U_rest model P + P W1 + P (W1^W1)
// together with its invariant ideal triples.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/ideal.hpp"
#include "poincare/parallel.hpp"
#include "poincare/poly.hpp"
#include "poincare/rep.hpp"

namespace poincare {

// Letters of n_super. z_ij = z_{2(i-1)+j}: z11=z1, z12=z2, z21=z3, z22=z4.
enum Letter : int { Z1 = 0, Z2, Z3, Z4, W1_1, W1_2, W2_1, W2_2 };
inline bool is_odd(int letter) { return letter >= W1_1; }
std::string letter_name(int letter);  // "z1", "w1^1", ...

struct SuperMonomial {
  Monomial even{};
  unsigned odd = 0;  // bit k set: letter W1_1 + k present

  int parity() const;
  /// 1..9: 3 * #W1 + #W2 + 1.
  int space() const;
  auto operator<=>(const SuperMonomial&) const = default;
};

class SuperElement {
 public:
  using Terms = std::map<SuperMonomial, Rational>;

  SuperElement() = default;
  static SuperElement one();
  static SuperElement letter(int l);
  static SuperElement monomial(const SuperMonomial& m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SuperMonomial& m, const Rational& c);
  Rational coeff(const SuperMonomial& m) const;
  /// Parity of the first term; throws if the element mixes parities.
  int parity() const;

  friend SuperElement operator+(SuperElement a, const SuperElement& b);
  friend SuperElement operator-(SuperElement a, const SuperElement& b);
  friend SuperElement operator*(const Rational& c, SuperElement a);
  /// Product in U(n_super), normal ordered.
  friend SuperElement operator*(const SuperElement& a, const SuperElement& b);
  friend bool operator==(const SuperElement& a, const SuperElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

std::string to_string(const SuperElement& e);

enum class Rewrite { LeftmostFirst, RightmostFirst };

/// PBW normal form of a word in the letters: z's first, then W1 in index
/// order, then W2 in index order.
SuperElement normal_order(const std::vector<int>& word, Rewrite strategy = Rewrite::LeftmostFirst);

/// xy - (-1)^{|x||y|} yx for homogeneous x, y.
SuperElement super_bracket(const SuperElement& x, const SuperElement& y);

/// g0 acting as an even derivation: the left factor moves the W2 index
/// (and the row index of z), the right factor the W1 index.
SuperElement act_g0(Gen g, const SuperElement& e);

// --- the nine spaces --------------------------------------------------------

/// Odd normal monomials (bitmasks) of space i.
std::vector<unsigned> space_odd_monomials(int space);

struct DecompositionEntry {
  int space = 1;
  int n = 0;  // the even factor is the component [n,d]
  int d = 0;
  IrrepLabel weight;
  std::size_t multiplicity = 0;
};

/// [n,d] (x) odd part of space i, split into g0-isotypic pieces by
/// highest-weight extraction, for n <= max_n, d <= max_d, spaces 1..9.
std::vector<DecompositionEntry> decompose_u_nsuper(int max_n, int max_d);

/// 2 * polynomial degree + number of odd letters.
int super_grade(int space, int n, int d);

/// A label of the reference list: space, variant offsets on (n, n).
struct ListedLabel {
  int space = 1;
  int da = 0;
  int db = 0;
  std::string name;  // "5 down down"
};

/// the nine-row reference label list, taken literally.
std::vector<ListedLabel> listed_label_list();

struct LabelListCheck {
  int space = 1;
  int n = 0;
  int d = 0;
  std::vector<IrrepLabel> listed;    // from the reference list
  std::vector<IrrepLabel> computed;  // with multiplicity
  bool matches() const { return listed == computed; }
};
std::vector<LabelListCheck> check_label_list(const std::vector<DecompositionEntry>& table, int max_n, int max_d);

struct RelationCheck {
  std::string row;
  std::size_t samples = 0;  // (n,d) where every label is defined
  std::size_t matched = 0;  // all labels present with equal weight and grade
  bool ok() const { return samples > 0 && matched == samples; }
};
/// Every row of the reference list of g_r-equivalences, evaluated on the
/// computed table for n <= max_n, d <= max_d.
std::vector<RelationCheck> check_relation_rows(const std::vector<DecompositionEntry>& table, int max_n, int max_d);

/// Checks that spaces {2,3,5,6,8,9} are closed under left multiplication
/// by n_super and under g0, on normal monomials of even degree <= max_degree.
bool summand_closed(int max_degree);

// --- the U_rest model ---------------------------------------------------------

/// A g0-invariant ideal of scalar polynomials, given per degree up to the
/// first degree where it is everything.
class ScalarIdeal {
 public:
  static ScalarIdeal from_spec(const IdealSpec& spec, int degree_cap);
  /// Everything of degree >= t.
  static ScalarIdeal threshold(int t);

  int saturation() const { return saturation_; }
  Subspace at(int d) const;
  SparseVec reduce(int d, const SparseVec& v) const;
  bool contains(int d, const SparseVec& v) const;

 private:
  std::map<int, Subspace> per_degree_;
  int saturation_ = 0;
};

struct SuperIdealTriple {
  IdealSpec i1;
  IdealSpec i4;
  IdealSpec i7;
  auto operator<=>(const SuperIdealTriple&) const = default;
};

/// I <= J as ideals: every generator of I lies in J.
bool ideal_contains(const IdealSpec& big, const IdealSpec& small);

struct URestBasis {
  int block = 0;         // 0: P, 1: P W1, 2: P (W1^W1)
  int degree = 0;
  std::size_t coord = 0;  // non-pivot monomial coordinate
  int odd = 0;           // W1 index for block 1
  std::size_t vr = 0;     // basis index of V_r
};

struct URestRep {
  std::optional<SuperIdealTriple> triple;
  IrrepLabel vr;
  std::array<std::size_t, 3> block_dims{};
  std::vector<URestBasis> basis;
  RepMatrices matrices;  // with the odd section: w1^1, w1^2, w2^1, w2^2
};

/// U_rest (x) V_r modulo I1 + I4 W1 + I7 (W1^W1). Throws NotInvariant if
/// the subspace is not stable.
URestRep build_urest_quotient(IrrepLabel vr, const ScalarIdeal& i1, const ScalarIdeal& i4, const ScalarIdeal& i7);

/// Trivial V_r. Throws Error when the chain I1 <= I4 <= I7 fails,
/// NotFiniteDimensional when an ideal does not saturate by degree_cap.
URestRep build_urest_rep(const SuperIdealTriple& t, int degree_cap = kDefaultDegreeCap);

struct InvarianceReport {
  bool invariant = false;
  std::string failure;  // first failing generator, if any
  std::size_t quotient_dim = 0;
};

/// Direct check that I1 + I4 W1 + I7 (W1^W1) is stable under z, w1, w2 and
/// g0, degree by degree up to saturation. When it is, the necessary
/// conditions (det shift, p- p- I7 <= I1) are asserted too.
InvarianceReport super_invariance(const SuperIdealTriple& t, int degree_cap = kDefaultDegreeCap);
bool check_super_invariance(const SuperIdealTriple& t, int degree_cap = kDefaultDegreeCap);

/// Invariant triples with the given I7 and codim(I1) <= codim_bound, sorted
/// by (codim I1, I1, codim I4, I4).
std::vector<SuperIdealTriple> enumerate_triples(const IdealSpec& i7, std::size_t codim_bound, Exec exec = Exec::Parallel);

/// Even relations, {w1^j, w2^i} = z_ij, odd squares and same-kind
/// anticommutators zero, [z, w] = 0, [g0, w] by the derivation action.
bool super_verify_relations(const RepMatrices& m);
bool super_verify_relations(const URestRep& r);

struct Filtration {
  int s = 0;
  std::array<int, 3> thresholds{};  // (s+2, s+1, s)
  bool invariant = false;           // checked up to check_degree
  int check_degree = 0;
};
Filtration urest_degree_filtration(int s, int check_degree = 6);

/// The defining 5x5 representation: block a (rows 0,1, the right factor),
/// the middle row 2, block b (rows 3,4, the left factor).
RepMatrices defining_super_rep();

struct SubquotientReport {
  std::size_t ambient_dim = 0;  // U_rest V / U_rest^0 V
  bool is_sub = false;          // injective intertwiner D -> Q
  bool is_quotient = false;     // surjective intertwiner Q -> D
};
/// Locates the defining representation in U_rest V_r / U_rest^0 V_r for
/// V_r = (0,1).
SubquotientReport defining_in_urest_quotient();

nlohmann::json to_json(const SuperIdealTriple& t);
SuperIdealTriple triple_from_json(const nlohmann::json& j);

}  // namespace poincare
