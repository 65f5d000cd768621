#include "poincare/sl2.hpp"

#include <algorithm>
#include <cstdlib>

#include "poincare/error.hpp"

namespace poincare {

const char* gen_name(Gen g) {
  static constexpr const char* names[] = {"E_L", "F_L", "H_L", "E_R", "F_R", "H_R"};
  return names[static_cast<int>(g)];
}

std::size_t dim(IrrepLabel l) {
  if (l.a < 0 || l.b < 0) throw Error("negative irrep label");
  return static_cast<std::size_t>(l.a + 1) * static_cast<std::size_t>(l.b + 1);
}

std::vector<IrrepLabel> tensor_decompose(IrrepLabel l1, IrrepLabel l2) {
  std::vector<IrrepLabel> out;
  for (int a = std::abs(l1.a - l2.a); a <= l1.a + l2.a; a += 2)
    for (int b = std::abs(l1.b - l2.b); b <= l1.b + l2.b; b += 2) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

IrrepMatrices irrep_matrices(IrrepLabel l) {
  const std::size_t n = dim(l);
  const int a = l.a, b = l.b;
  IrrepMatrices m{l, {}};
  for (auto& x : m.action) x = Matrix(n, n);
  auto idx = [b](int j, int k) { return static_cast<std::size_t>(j * (b + 1) + k); };
  auto& EL = m.action[0];
  auto& FL = m.action[1];
  auto& HL = m.action[2];
  auto& ER = m.action[3];
  auto& FR = m.action[4];
  auto& HR = m.action[5];
  for (int j = 0; j <= a; ++j)
    for (int k = 0; k <= b; ++k) {
      std::size_t v = idx(j, k);
      if (a - 2 * j) HL.set(v, v, a - 2 * j);
      if (b - 2 * k) HR.set(v, v, b - 2 * k);
      // Column v holds the image of v.
      if (j < a) FL.set(idx(j + 1, k), v, 1);
      if (j > 0) EL.set(idx(j - 1, k), v, j * (a - j + 1));
      if (k < b) FR.set(idx(j, k + 1), v, 1);
      if (k > 0) ER.set(idx(j, k - 1), v, k * (b - k + 1));
    }
  return m;
}

bool satisfies_sl2_relations(const std::array<Matrix, 6>& m) {
  for (int f = 0; f < 2; ++f) {
    const Matrix& E = m[3 * f];
    const Matrix& F = m[3 * f + 1];
    const Matrix& H = m[3 * f + 2];
    if (!(commutator(H, E) == Rational(2) * E)) return false;
    if (!(commutator(H, F) == Rational(-2) * F)) return false;
    if (!(commutator(E, F) == H)) return false;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j)
      if (!commutator(m[i], m[j]).is_zero()) return false;
  return true;
}

std::string spin_notation(IrrepLabel l) {
  auto half = [](int x) { return x % 2 ? std::to_string(x) + "/2" : std::to_string(x / 2); };
  return "(" + half(l.a) + ", " + half(l.b) + ")";
}

}  // namespace poincare
