#include <doctest.h>

#include "poincare/error.hpp"
#include "poincare/poly.hpp"

using namespace poincare;

namespace {

std::size_t binom(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("monomial indexing matches enumeration order") {
  for (int d = 0; d <= 8; ++d) {
    const auto& ms = monomials(d);
    CHECK(ms.size() == binom(d + 3, 3));
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(mono_index(ms[i]) == i);
  }
  CHECK(monomials(1) == std::vector<Monomial>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

TEST_CASE("det z is invariant and z1 is highest weight") {
  Poly det = Poly::det();
  for (Gen g : kAllGens) CHECK(act_generator(g, det).is_zero());
  CHECK(act_generator(Gen::EL, Poly::z(1)).is_zero());
  CHECK(act_generator(Gen::ER, Poly::z(1)).is_zero());
  Poly z3z4 = Poly::z(3) * Poly::z(4);
  CHECK(act_generator(Gen::HL, z3z4) == Rational(-2) * z3z4);
}

TEST_CASE("vector-valued action") {
  IrrepLabel half{1, 0};
  auto hw = VPoly::scalar_times(Poly::constant(1), half, 0);
  CHECK(act_generator_v(Gen::EL, hw).is_zero());
  auto p = VPoly::scalar_times(Poly::z(1), half, 0);
  auto hp = act_generator_v(Gen::HL, p);
  CHECK(hp.components[0] == Rational(2) * Poly::z(1));
  CHECK(hp.components[1].is_zero());

  auto full = Subspace::full(space_dim(1, half));
  auto hws = highest_weight_vectors(full, 1, half);
  REQUIRE(hws.size() == 2);
  CHECK(hws[0].weight == IrrepLabel{0, 1});
  CHECK(hws[1].weight == IrrepLabel{2, 1});
}

TEST_CASE("coordinate action matrices agree with the symbolic action") {
  for (IrrepLabel v : {IrrepLabel{0, 0}, IrrepLabel{1, 0}, IrrepLabel{1, 2}}) {
    for (int d = 0; d <= 3; ++d) {
      for (std::size_t i = 0; i < space_dim(d, v); i += 3) {
        SparseVec e = SparseVec::unit(i);
        VPoly p = vpoly_from_coords(e, d, v);
        for (Gen g : kAllGens) CHECK(coords(act_generator_v(g, p), d) == g0_matrix(g, d, v).apply(e));
        for (int var = 0; var < 4; ++var) {
          VPoly q = p;
          for (auto& c : q.components) c = Poly::z(var + 1) * c;
          CHECK(coords(q, d + 1) == mult_matrix(var, d, v).apply(e));
        }
      }
    }
  }
}

TEST_CASE("bracket relations on polynomial spaces") {
  for (int d = 0; d <= 5; ++d) {
    std::array<Matrix, 6> m;
    for (Gen g : kAllGens) m[static_cast<int>(g)] = g0_matrix(g, d, {0, 0});
    CHECK(satisfies_sl2_relations(m));
  }
}

TEST_CASE("highest weight vectors of scalar polynomials") {
  auto d1 = highest_weight_vectors(Subspace::full(4), 1, {0, 0});
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].weight == IrrepLabel{1, 1});
  CHECK(poly_from_coords(d1[0].vector, 1) == Poly::z(1));

  auto d2 = highest_weight_vectors(Subspace::full(10), 2, {0, 0});
  REQUIRE(d2.size() == 2);
  CHECK(d2[0].weight == IrrepLabel{0, 0});
  CHECK(Subspace::span(10, {d2[0].vector}) == Subspace::span(10, {coords(Poly::det(), 2)}));
  CHECK(d2[1].weight == IrrepLabel{2, 2});
  CHECK(Subspace::span(10, {d2[1].vector}) == Subspace::span(10, {coords(Poly::z(1).pow(2), 2)}));

  auto d0 = highest_weight_vectors(Subspace::full(1), 0, {0, 0});
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].weight == IrrepLabel{0, 0});

  CHECK_THROWS_AS(highest_weight_vectors(Subspace::span(4, {SparseVec::unit(0)}), 1, {0, 0}), NotInvariant);
}

TEST_CASE("component spans") {
  CHECK(component_span({0, 0}).dim() == 1);
  CHECK(component_span({1, 0}) == Subspace::full(4));
  CHECK(component_span({0, 1}).dim() == 1);
  for (int d = 0; d <= 6; ++d) {
    auto comps = degree_components(d);
    Subspace total(monomial_count(d));
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto si = component_span(comps[i]);
      CHECK(si.dim() == comps[i].dim());
      CHECK(total.intersection(si).dim() == 0);
      total = total.sum(si);
    }
    CHECK(total.is_full());
  }
}

TEST_CASE("degree components and the binomial identity") {
  CHECK(degree_components(0) == std::vector<ComponentLabel>{{0, 0}});
  CHECK(degree_components(2) == std::vector<ComponentLabel>{{2, 0}, {0, 1}});
  CHECK(degree_components(3) == std::vector<ComponentLabel>{{3, 0}, {1, 1}});
  for (int d = 0; d <= 12; ++d) {
    std::size_t total = 0;
    for (auto c : degree_components(d)) total += c.dim();
    CHECK(total == binom(d + 3, 3));
  }
}

TEST_CASE("poly serialization") {
  Poly p = Poly::det() + frac(1, 2) * Poly::z(2).pow(2);
  CHECK(to_json(p).dump() == R"([[1,0,0,1,"1"],[0,2,0,0,"1/2"],[0,1,1,0,"-1"]])");
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_string(p) == "z1*z4 + 1/2*z2^2 - z2*z3");
}
