#pragma once

// Irreducible representations of sl(2) x sl(2) in doubled-spin labels.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/linalg.hpp"

namespace poincare {

/// (a, b) = (2 * left spin, 2 * right spin).
struct IrrepLabel {
  int a = 0;
  int b = 0;
  auto operator<=>(const IrrepLabel&) const = default;
};

enum class Gen { EL = 0, FL, HL, ER, FR, HR };
inline constexpr std::array<Gen, 6> kAllGens{Gen::EL, Gen::FL, Gen::HL, Gen::ER, Gen::FR, Gen::HR};

const char* gen_name(Gen g);  // "E_L", ...

std::size_t dim(IrrepLabel l);

/// Clebsch-Gordan in each factor, sorted ascending.
std::vector<IrrepLabel> tensor_decompose(IrrepLabel l1, IrrepLabel l2);

/// Basis v_{j,k} at index j*(b+1)+k; F lowers without normalization.
struct IrrepMatrices {
  IrrepLabel label;
  std::array<Matrix, 6> action;
  const Matrix& operator[](Gen g) const { return action[static_cast<int>(g)]; }
};

IrrepMatrices irrep_matrices(IrrepLabel l);

/// Checks [H,E]=2E, [H,F]=-2F, [E,F]=H in each factor and that the two
/// factors commute.
bool satisfies_sl2_relations(const std::array<Matrix, 6>& m);

/// "(a/2, b/2)" with integers printed plainly, e.g. "(1/2, 0)" or "(1, 1)".
std::string spin_notation(IrrepLabel l);

inline void to_json(nlohmann::json& j, const IrrepLabel& l) { j = nlohmann::json::array({l.a, l.b}); }
inline void from_json(const nlohmann::json& j, IrrepLabel& l) {
  l.a = j.at(0).get<int>();
  l.b = j.at(1).get<int>();
}

}  // namespace poincare
