#pragma once

// Text input for the command line: labels, parameter lists and the
// generator mini-language.
//
//   gens  := gen ("," gen)*
//   gen   := poly ["@" k]          polynomial times basis vector v_k of V0
//          | "hw(" d ")"           every highest weight vector of degree d
//          | "hw(" d "," a "," b ")"  those of weight (a,b)
//   poly  := ["-"] term (("+"|"-") term)*
//   term  := [rational ["*"]] factor ("*" factor)*  |  rational
//   factor:= ("z1".."z4" | "det") ["^" k]

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/ideal.hpp"
#include "poincare/poly.hpp"

namespace poincare {

Poly parse_poly(std::string_view text);
std::vector<VPoly> parse_generators(std::string_view text, IrrepLabel source);

/// "a,b" with nonnegative integers.
IrrepLabel parse_label(std::string_view text);
/// "a,b;c,d;..."
std::vector<IrrepLabel> parse_labels(std::string_view text);
/// Four comma-separated rationals.
std::array<Rational, 4> parse_params(std::string_view text);

/// Scalar generators that are each a nonzero multiple of z1^r det^s.
IdealSpec parse_ideal_spec(std::string_view text);

}  // namespace poincare
