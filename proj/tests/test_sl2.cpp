#include <doctest.h>

#include <numeric>

#include "poincare/sl2.hpp"

using namespace poincare;

TEST_CASE("irrep dimensions") {
  CHECK(dim({0, 0}) == 1);
  CHECK(dim({1, 1}) == 4);
  CHECK(dim({2, 1}) == 6);
}

TEST_CASE("tensor decomposition examples") {
  CHECK(tensor_decompose({1, 1}, {1, 0}) == std::vector<IrrepLabel>{{0, 1}, {2, 1}});
  CHECK(tensor_decompose({0, 0}, {3, 2}) == std::vector<IrrepLabel>{{3, 2}});
  CHECK(tensor_decompose({1, 1}, {1, 1}) == std::vector<IrrepLabel>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
}

TEST_CASE("tensor decomposition preserves dimension") {
  for (int a1 = 0; a1 <= 6; ++a1)
    for (int b1 = 0; b1 <= 6; ++b1)
      for (int a2 = 0; a2 <= 6; ++a2)
        for (int b2 = 0; b2 <= 6; ++b2) {
          auto parts = tensor_decompose({a1, b1}, {a2, b2});
          std::size_t total = 0;
          for (auto l : parts) total += dim(l);
          CHECK(total == dim({a1, b1}) * dim({a2, b2}));
        }
}

TEST_CASE("irrep matrices") {
  auto triv = irrep_matrices({0, 0});
  for (const auto& m : triv.action) CHECK(m == Matrix(1, 1));

  auto half = irrep_matrices({1, 0});
  CHECK(half[Gen::HL] == Matrix::from_dense({{1, 0}, {0, -1}}));
  CHECK(half[Gen::FL] == Matrix::from_dense({{0, 0}, {1, 0}}));
  CHECK(half[Gen::EL] == Matrix::from_dense({{0, 1}, {0, 0}}));

  auto one = irrep_matrices({2, 0});
  CHECK(commutator(one[Gen::EL], one[Gen::FL]) == Matrix::from_dense({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));

  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      auto m = irrep_matrices({a, b});
      CHECK(satisfies_sl2_relations(m.action));
      // v_{0,0} is highest weight
      CHECK(m[Gen::EL].apply(SparseVec::unit(0)).empty());
      CHECK(m[Gen::ER].apply(SparseVec::unit(0)).empty());
    }
}

TEST_CASE("spin notation") {
  CHECK(spin_notation({1, 0}) == "(1/2, 0)");
  CHECK(spin_notation({2, 2}) == "(1, 1)");
  CHECK(spin_notation({3, 1}) == "(3/2, 1/2)");
}
