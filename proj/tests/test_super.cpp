#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "poincare/error.hpp"
#include "poincare/super.hpp"

using namespace poincare;

namespace {

const IdealSpec M{{{1, 0}}};
const IdealSpec M2{{{2, 0}, {0, 1}}};
const IdealSpec Z1sq{{{2, 0}}};
const IdealSpec M3{{{3, 0}, {1, 1}}};
const IdealSpec Z1cubeDet{{{3, 0}, {0, 1}}};
const IdealSpec Z1cube{{{3, 0}}};

SuperElement L(int l) { return SuperElement::letter(l); }

// The 5x5 matrix of a letter in the defining representation, built from
// the block layout directly (rows: a a | g | b b).
Matrix letter_matrix(int l) {
  Matrix m(5, 5);
  if (l < 4) m.set(3 + l / 2, l % 2, 1);
  else if (l < W2_1) m.set(2, l - W1_1, 1);
  else m.set(3 + (l - W2_1), 2, 1);
  return m;
}

Matrix element_matrix(const SuperElement& e, const std::function<Matrix(int)>& rep, std::size_t n) {
  Matrix out(n, n);
  for (const auto& [m, c] : e.terms()) {
    Matrix t = Matrix::identity(n);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < m.even[i]; ++k) t = t * rep(i);
    for (int k = 0; k < 4; ++k)
      if (m.odd >> k & 1u) t = t * rep(W1_1 + k);
    out = out + c * t;
  }
  return out;
}

Matrix word_matrix(const std::vector<int>& w, const std::function<Matrix(int)>& rep, std::size_t n) {
  Matrix t = Matrix::identity(n);
  for (int l : w) t = t * rep(l);
  return t;
}

}  // namespace

TEST_CASE("normal_order examples") {
  CHECK(normal_order({W1_1, W1_1}).is_zero());
  CHECK(normal_order({W2_1, W1_1}) == Rational(-1) * (L(W1_1) * L(W2_1)) + L(Z1));
  CHECK(to_string(normal_order({W2_1, W1_1})) == "-w1^1*w2^1 + z1");
  CHECK(normal_order({W1_1, Z2}) == normal_order({Z2, W1_1}));
  CHECK(to_string(normal_order({W1_1, Z2})) == "z2*w1^1");
  CHECK(normal_order({W2_2, W1_1}) == Rational(-1) * normal_order({W1_1, W2_2}) + L(Z3));
  CHECK(normal_order({}) == SuperElement::one());
  CHECK_THROWS_AS(normal_order({9}), Error);
}

TEST_CASE("anticommutators agree with 5x5 block products") {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix w2 = letter_matrix(W2_1 + i), w1 = letter_matrix(W1_1 + j);
      Matrix z = anticommutator(w2, w1);
      CHECK(z == letter_matrix(2 * i + j));
      CHECK(super_bracket(L(W2_1 + i), L(W1_1 + j)) == L(2 * i + j));
    }
  for (int a = W1_1; a <= W2_2; ++a)
    for (int b = W1_1; b <= W2_2; ++b)
      if ((a >= W2_1) == (b >= W2_1)) {
        CHECK(anticommutator(letter_matrix(a), letter_matrix(b)).is_zero());
        CHECK(super_bracket(L(a), L(b)).is_zero());
      }
}

TEST_CASE("PBW confluence, parity and the matrix homomorphism") {
  std::mt19937 rng(17);
  auto defining = [](int l) { return letter_matrix(l); };
  auto urest = build_urest_rep({M2, M2, M});
  auto urest_letter = [&](int l) { return l < 4 ? urest.matrices.p_minus[l] : (*urest.matrices.odd)[l - W1_1]; };
  for (int t = 0; t < 200; ++t) {
    std::vector<int> w(rng() % 7);
    for (auto& l : w) l = static_cast<int>(rng() % 8);
    auto left = normal_order(w, Rewrite::LeftmostFirst);
    auto right = normal_order(w, Rewrite::RightmostFirst);
    CHECK(left == right);
    int odd = 0;
    for (int l : w) odd += is_odd(l);
    for (const auto& [m, c] : left.terms()) CHECK(m.parity() == odd % 2);
    CHECK(element_matrix(left, defining, 5) == word_matrix(w, defining, 5));
    CHECK(element_matrix(left, urest_letter, urest.matrices.dim) == word_matrix(w, urest_letter, urest.matrices.dim));
  }
}

TEST_CASE("graded Jacobi on the generators") {
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) {
        auto X = L(x), Y = L(y), Z = L(z);
        int sign = (is_odd(x) && is_odd(y)) ? -1 : 1;
        auto lhs = super_bracket(X, super_bracket(Y, Z));
        auto rhs = super_bracket(super_bracket(X, Y), Z) + Rational(sign) * super_bracket(Y, super_bracket(X, Z));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("g0 acts by derivations compatible with the brackets") {
  for (Gen g : kAllGens)
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        auto lhs = act_g0(g, super_bracket(L(a), L(b)));
        auto rhs = super_bracket(act_g0(g, L(a)), L(b)) + super_bracket(L(a), act_g0(g, L(b)));
        CHECK(lhs == rhs);
      }
  // sl2 relations on every letter.
  for (int l = 0; l < 8; ++l) {
    auto e = L(l);
    CHECK(act_g0(Gen::EL, act_g0(Gen::FL, e)) - act_g0(Gen::FL, act_g0(Gen::EL, e)) == act_g0(Gen::HL, e));
    CHECK(act_g0(Gen::ER, act_g0(Gen::FR, e)) - act_g0(Gen::FR, act_g0(Gen::ER, e)) == act_g0(Gen::HR, e));
  }
  CHECK(act_g0(Gen::ER, L(W1_2)) == L(W1_1));
  CHECK(act_g0(Gen::EL, L(W2_2)) == L(W2_1));
  CHECK(act_g0(Gen::EL, L(W1_2)).is_zero());
}

TEST_CASE("nine spaces") {
  std::size_t total = 0;
  for (int s = 1; s <= 9; ++s) {
    auto odd = space_odd_monomials(s);
    total += odd.size();
    for (unsigned m : odd) CHECK(SuperMonomial{{}, m}.space() == s);
  }
  CHECK(total == 16);
  CHECK(space_odd_monomials(5).size() == 4);
  CHECK(space_odd_monomials(9).size() == 1);
  CHECK(summand_closed(3));
}

TEST_CASE("decompose_u_nsuper") {
  const int max_n = 3, max_d = 2;
  auto table = decompose_u_nsuper(max_n, max_d);
  auto find = [&](int space, int n, int d) {
    std::map<IrrepLabel, std::size_t> out;
    for (const auto& e : table)
      if (e.space == space && e.n == n && e.d == d) out[e.weight] += e.multiplicity;
    return out;
  };
  CHECK(find(1, 0, 0) == std::map<IrrepLabel, std::size_t>{{{0, 0}, 1}});
  CHECK(find(2, 1, 0) == std::map<IrrepLabel, std::size_t>{{{0, 1}, 1}, {{2, 1}, 1}});

  // Oracle: Clebsch-Gordan on [n,n] (x) the odd part's label.
  static const IrrepLabel odd_label[10] = {{}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {1, 1}, {0, 1}, {0, 0}, {1, 0}, {0, 0}};
  for (int s = 1; s <= 9; ++s)
    for (int n = 0; n <= max_n; ++n)
      for (int d = 0; d <= max_d; ++d) {
        std::map<IrrepLabel, std::size_t> expect;
        for (auto l : tensor_decompose({n, n}, odd_label[s])) ++expect[l];
        // Spaces 3, 7 and 9 carry a one-dimensional odd part of weight 0.
        CHECK(find(s, n, d) == expect);
      }

  // Total dimension: 16 per monomial.
  std::map<int, std::size_t> per_degree;
  for (const auto& e : table) per_degree[e.n + 2 * e.d] += e.multiplicity * dim(e.weight);
  for (int deg = 0; deg <= max_n; ++deg) CHECK(per_degree[deg] == monomial_count(deg) * 16);
}

TEST_CASE("listed relation rows against the computed table") {
  auto table = decompose_u_nsuper(3, 2);
  std::map<std::string, RelationCheck> rows;
  for (const auto& r : check_relation_rows(table, 3, 2)) rows[r.row] = r;
  CHECK(rows.at("5↓↓[n,d] ↔ 1[n+1,d]").ok());
  CHECK(rows.at("5↑↑[n,d] ↔ 1[n-1,d+1]").ok());
  CHECK(rows.at("8↓[n,d] ↔ 4[n+1,d]").ok());
  CHECK(rows.at("6↑[n,d] ↔ 2↓[n-1,d+1]").ok());
  CHECK(rows.at("5↓↓[n-1,d+1], 5↑↑[n+1,d] ↔ 9[n,d]").ok());
  // Rows that do not hold as printed.
  CHECK(rows.at("8↑[n,d] ↔ 4↑[n-1,d+1]").matched == 0);
  CHECK(rows.at("5↓↓[n-1,d+1], 5↓↓[n+1,d] ↔ 9[n,d]").matched == 0);
  CHECK(rows.at("6↓[n,d] ↔ 2↑[n+1,d]").matched == 0);

  // The label list holds everywhere except the 6↓ entry.
  for (const auto& c : check_label_list(table, 3, 2)) {
    CAPTURE(c.space);
    CHECK(c.matches() == (c.space != 6));
  }
}

TEST_CASE("grade bookkeeping") {
  CHECK(super_grade(1, 0, 0) == 0);
  CHECK(super_grade(9, 0, 0) == 4);
  CHECK(super_grade(5, 1, 1) == 8);
  // 5↓↓[n,d] and 1[n+1,d] sit at the same grade.
  for (int n = 0; n < 4; ++n)
    for (int d = 0; d < 3; ++d) CHECK(super_grade(5, n, d) == super_grade(1, n + 1, d));
}

TEST_CASE("build_urest_rep examples") {
  auto a = build_urest_rep({M, M, M});
  CHECK(a.matrices.dim == 4);
  CHECK(a.block_dims == std::array<std::size_t, 3>{1, 2, 1});
  CHECK(super_verify_relations(a));

  auto b = build_urest_rep({M2, M2, M});
  CHECK(b.block_dims == std::array<std::size_t, 3>{5, 10, 1});
  CHECK(super_verify_relations(b));

  CHECK_THROWS_AS(build_urest_rep({M, M2, M}), Error);
  CHECK_THROWS_AS(build_urest_rep({Z1cube, Z1cube, M}), NotInvariant);
}

TEST_CASE("super invariance examples") {
  CHECK(check_super_invariance({M, M, M}));
  CHECK(check_super_invariance({M2, M2, M}));
  auto r = super_invariance({Z1cube, Z1cube, M});
  CHECK_FALSE(r.invariant);
  CHECK_FALSE(r.failure.empty());
  CHECK_FALSE(check_super_invariance({M, M2, M}));
}

TEST_CASE("triple enumeration") {
  auto one = enumerate_triples(M, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == SuperIdealTriple{M, M, M});

  auto serial = enumerate_triples(M, 20, Exec::Serial);
  auto parallel = enumerate_triples(M, 20, Exec::Parallel);
  CHECK(serial == parallel);
  for (const auto& t : serial) {
    CHECK(check_super_invariance(t));
    auto rep = build_urest_rep(t);
    CHECK(super_verify_relations(rep));
    CHECK(rep.matrices.dim == super_invariance(t).quotient_dim);
  }

  // Oracle: the split-form conditions I1 <= I4 <= I7, p- I4 <= I1 and
  // p- I7 <= I4, checked with the per-degree ideal oracle.
  auto mult_inside = [](const IdealSpec& src, const IdealSpec& dst) {
    IdealOracle a(src, 16), b(dst, 16);
    int sa = *a.saturation_degree(), sb = *b.saturation_degree();
    for (int d = 0; d + 1 < sb; ++d) {
      Subspace from = d < sa ? a.at(d) : Subspace::full(monomial_count(d));
      for (const auto& v : from.basis())
        for (int var = 0; var < 4; ++var)
          if (!b.at(d + 1).contains(mult_matrix(var, d, {0, 0}).apply(v))) return false;
    }
    return true;
  };
  std::set<SuperIdealTriple> expect;
  auto cands = enumerate_ideals(20);
  for (const auto& i1 : cands)
    for (const auto& i4 : cands)
      if (ideal_contains(i4, i1) && ideal_contains(M, i4) && mult_inside(i4, i1) && mult_inside(M, i4))
        expect.insert({i1, i4, M});
  CHECK(std::set<SuperIdealTriple>(serial.begin(), serial.end()) == expect);
}

TEST_CASE("super_verify_relations detects a sign flip") {
  auto rep = build_urest_rep({M2, M2, M});
  CHECK(super_verify_relations(rep.matrices));
  RepMatrices bad = rep.matrices;
  Matrix& w = (*bad.odd)[3];
  auto col = w.columns();
  bool flipped = false;
  for (std::size_t c = 0; c < col.size() && !flipped; ++c)
    if (!col[c].empty()) {
      auto [r, x] = col[c].entries().front();
      w.set(r, c, -x);
      flipped = true;
    }
  REQUIRE(flipped);
  CHECK_FALSE(super_verify_relations(bad));
  RepMatrices even_only = rep.matrices;
  even_only.odd.reset();
  CHECK_FALSE(super_verify_relations(even_only));
}

TEST_CASE("general V_r in build mode") {
  for (IrrepLabel vr : {IrrepLabel{0, 1}, IrrepLabel{1, 0}, IrrepLabel{1, 1}}) {
    auto q = build_urest_quotient(vr, ScalarIdeal::threshold(2), ScalarIdeal::threshold(1), ScalarIdeal::threshold(0));
    CHECK(q.matrices.dim == (5 + 2) * dim(vr));
    CHECK(super_verify_relations(q));
    auto g = component_graph(q.matrices);
    CHECK(g.is_acyclic());
  }
}

TEST_CASE("defining representation") {
  auto d = defining_super_rep();
  CHECK(super_verify_relations(d));
  for (int l = 0; l < 8; ++l) {
    const Matrix& m = l < 4 ? d.p_minus[l] : (*d.odd)[l - W1_1];
    CHECK(m == letter_matrix(l));
  }
  auto rep = defining_in_urest_quotient();
  CHECK(rep.ambient_dim == 14);
  CHECK(rep.is_quotient);
  CHECK_FALSE(rep.is_sub);
}

TEST_CASE("degree filtration") {
  auto f = urest_degree_filtration(0);
  CHECK(f.thresholds == std::array<int, 3>{2, 1, 0});
  CHECK(f.invariant);
  CHECK(f.check_degree == 6);
  for (int s = 1; s < 4; ++s) {
    auto a = urest_degree_filtration(s - 1), b = urest_degree_filtration(s);
    CHECK(b.invariant);
    for (int k = 0; k < 3; ++k) CHECK(b.thresholds[k] > a.thresholds[k]);
  }
}

TEST_CASE("triple serialization") {
  SuperIdealTriple t{M2, M2, M};
  auto j = to_json(t);
  CHECK(j.dump() == R"({"i1":[[2,0],[0,1]],"i4":[[2,0],[0,1]],"i7":[[1,0]]})");
  CHECK(triple_from_json(j) == t);
  auto rep = build_urest_rep(t);
  auto rj = to_json(rep.matrices);
  CHECK(rj.contains("odd"));
  CHECK(to_json(rep_from_json(rj)) == rj);
}
