#pragma once

// g0-invariant ideals of C[z1..z4] described by generators z1^r det^s:
// membership, codimension, sinks and enumeration, with a brute-force
// per-degree oracle to check the combinatorics against.

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "poincare/linalg.hpp"
#include "poincare/poly.hpp"

namespace poincare {

/// Generators (r_i, s_i) with r strictly decreasing and s strictly
/// increasing from s_1 = 0.
struct IdealSpec {
  std::vector<ComponentLabel> gens;
  auto operator<=>(const IdealSpec&) const = default;
};

/// Throws Error unless the type invariants hold (nonempty, r strictly
/// decreasing, 0 = s_1 < s_2 < ..., r_1 >= 1).
void check_spec(const IdealSpec& spec);

/// [r,s] lies in the ideal iff some generator has s >= s_i and
/// r + s >= r_i + s_i. No preconditions.
bool contains_component(const IdealSpec& spec, ComponentLabel c);

struct MinimalityReport {
  bool inequality = false;   // s_1 + ... + s_j <= r_1 - r_j for j >= 2
  bool irredundant = false;  // no generator lies in the ideal of the others
  bool minimal() const { return inequality && irredundant; }
};

MinimalityReport minimality(const IdealSpec& spec);
/// Both conditions. Throws on malformed specs.
bool validate_minimal(const IdealSpec& spec);

/// Throws InfiniteCodimension without an s = 0 generator.
std::size_t codimension(const IdealSpec& spec);
/// Surviving components by degree, then by decreasing r.
std::vector<ComponentLabel> quotient_components(const IdealSpec& spec);

/// The closed-form sink list, taken literally. nullopt when an exponent
/// in the formula would be negative.
std::optional<std::vector<ComponentLabel>> sinks_formula(const IdealSpec& spec);

/// Surviving components whose product with p- lies in the ideal, decided
/// combinatorially and certified by multiplication in the oracle quotient.
/// Throws VerificationFailed if the two disagree.
std::vector<ComponentLabel> sinks_graph(const IdealSpec& spec);

/// All irredundant specs with codimension <= max_codim, sorted by
/// (codimension, gens).
std::vector<IdealSpec> enumerate_ideals(std::size_t max_codim);

/// Per-degree ideal subspaces computed from the generators alone:
/// I_d = sum_i z_i I_{d-1} + (g0-closure of the degree-d generators).
class IdealOracle {
 public:
  IdealOracle(IdealSpec spec, int degree_cap);

  const IdealSpec& spec() const { return spec_; }
  int degree_cap() const { return cap_; }
  const Subspace& at(int d) const { return per_degree_.at(d); }
  /// First degree where the ideal is everything, if reached.
  std::optional<int> saturation_degree() const { return saturation_; }
  bool contains(ComponentLabel c) const;
  /// Throws NotFiniteDimensional if saturation is not reached by the cap.
  std::size_t codimension() const;

 private:
  IdealSpec spec_;
  int cap_;
  std::map<int, Subspace> per_degree_;
  std::optional<int> saturation_;
};

/// Throws Error when degree_cap is below the largest generator degree.
IdealOracle ideal_oracle(const IdealSpec& spec, int degree_cap);

/// Per-degree ideal for arbitrary V0-valued generators (the same
/// recurrence). Stops after the first full degree or at the cap.
struct IdealPerDegree {
  std::map<int, Subspace> per_degree;
  std::optional<int> saturation;
};
IdealPerDegree generate_ideal(IrrepLabel target, const std::vector<std::pair<int, SparseVec>>& gens, int degree_cap);

nlohmann::json to_json(const IdealSpec& spec);
IdealSpec ideal_from_json(const nlohmann::json& j);
std::string to_string(const IdealSpec& spec);  // "{(2,0),(1,1)}"

}  // namespace poincare

namespace poincare {

/// Compares contains_component and codimension with the oracle for every
/// component up to one degree past saturation.
bool oracle_agrees(const IdealSpec& spec);

}  // namespace poincare
