#include <doctest.h>

#include <random>

#include "poincare/error.hpp"
#include "poincare/parse.hpp"
#include "poincare/rep.hpp"

using namespace poincare;

TEST_CASE("polynomials") {
  Poly z1 = Poly::z(1), det = Poly::det();
  CHECK(parse_poly("z1^2") == z1 * z1);
  CHECK(parse_poly("z1*det") == z1 * det);
  CHECK(parse_poly("det^2") == det * det);
  CHECK(parse_poly("det") == Poly::z(1) * Poly::z(4) - Poly::z(2) * Poly::z(3));
  CHECK(parse_poly(" 3/2 z1 * z2 - z3^0 ") == frac(3, 2) * z1 * Poly::z(2) - Poly::constant(1));
  CHECK(parse_poly("-z4 + 2*z4") == Poly::z(4));
  CHECK(parse_poly("7") == Poly::constant(7));
  CHECK(parse_poly("z1 - z1").is_zero());
}

TEST_CASE("round trip through to_string") {
  // random polynomials printed and parsed back
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), var(1, 4), len(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p;
    for (int t = 0, n = len(rng); t < n; ++t) {
      Poly m = Poly::constant(frac(coef(rng), 1 + (trial % 3)));
      for (int k = 0; k < 3; ++k) m = m * Poly::z(var(rng));
      p = p + m;
    }
    std::string s = to_string(p);
    if (p.is_zero()) continue;
    CHECK_MESSAGE(parse_poly(s) == p, s);
  }
}

TEST_CASE("malformed polynomials") {
  for (const char* bad : {"", "z5", "z1^", "z1 z2", "x", "z1 +", "2/0 z1", "det^-1"}) {
    CHECK_THROWS_AS(parse_poly(bad), Error);
  }
}

TEST_CASE("generators") {
  auto g = parse_generators("z1^2, z1*det", {0, 0});
  REQUIRE(g.size() == 2);
  CHECK(g[0].degree() == 2);
  CHECK(g[1].degree() == 3);

  // vector-valued: @k picks the basis vector of V0
  auto v = parse_generators("z1@1", {1, 0});
  REQUIRE(v.size() == 1);
  CHECK(v[0] == VPoly::scalar_times(Poly::z(1), {1, 0}, 1));
  CHECK_THROWS_AS(parse_generators("z1@2", {1, 0}), Error);

  // degree-two highest weight vectors of P(1,0): (1/2,0) x [2,0] + [0,1]
  auto hw = parse_generators("hw(2)", {1, 0});
  std::size_t expected = tensor_decompose({1, 0}, {2, 2}).size() + tensor_decompose({1, 0}, {0, 0}).size();
  CHECK(hw.size() == expected);
  auto only = parse_generators("hw(2,3,2)", {1, 0});
  CHECK(only.size() == 1);
  CHECK_THROWS_AS(parse_generators("hw(2,9,9)", {1, 0}), Error);
  CHECK_THROWS_AS(parse_generators("hw(2", {1, 0}), Error);
  CHECK_THROWS_AS(parse_generators("z1,,z2", {0, 0}), Error);
  CHECK_THROWS_AS(parse_generators("z1-z1", {0, 0}), Error);

  CHECK(build_quotient({1, 0}, hw).dim() == 10);
  CHECK(build_quotient({0, 0}, parse_generators("z1^2,z1*det", {0, 0})).dim() == 6);
}

TEST_CASE("labels, parameters and ideal specs") {
  CHECK(parse_label(" 2 , 1") == IrrepLabel{2, 1});
  CHECK_THROWS_AS(parse_label("2"), Error);
  CHECK_THROWS_AS(parse_label("-1,0"), Error);
  CHECK(parse_labels("1,0;0,1") == std::vector<IrrepLabel>{{1, 0}, {0, 1}});
  auto p = parse_params("1,-1/2,0,3/4");
  CHECK(p[1] == frac(-1, 2));
  CHECK(p[3] == frac(3, 4));
  CHECK_THROWS_AS(parse_params("1,2,3"), Error);

  CHECK(parse_ideal_spec("z1") == IdealSpec{{{1, 0}}});
  CHECK(parse_ideal_spec("2 z1^2, -det") == IdealSpec{{{2, 0}, {0, 1}}});
  CHECK(parse_ideal_spec("z1^3, z1*det") == IdealSpec{{{3, 0}, {1, 1}}});
  CHECK(parse_ideal_spec("det, z1^2") == IdealSpec{{{2, 0}, {0, 1}}});
  CHECK_THROWS_AS(parse_ideal_spec("z2"), Error);
  CHECK_THROWS_AS(parse_ideal_spec("z1^2+z1"), Error);
  CHECK_THROWS_AS(parse_ideal_spec("det"), Error);  // no pure z1 power
}
