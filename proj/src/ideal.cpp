#include "poincare/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "poincare/error.hpp"

namespace poincare {

void check_spec(const IdealSpec& spec) {
  const auto& g = spec.gens;
  if (g.empty()) throw Error("ideal spec has no generators");
  if (g[0].s != 0) throw Error("first generator must have s = 0");
  if (g[0].r < 1) throw Error("first generator must have r >= 1");
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i].r < 0) throw Error("negative r in ideal spec");
    if (!(g[i].r < g[i - 1].r)) throw Error("r must be strictly decreasing");
    if (!(g[i].s > g[i - 1].s)) throw Error("s must be strictly increasing");
  }
}

bool contains_component(const IdealSpec& spec, ComponentLabel c) {
  return std::any_of(spec.gens.begin(), spec.gens.end(),
                     [&](ComponentLabel g) { return c.s >= g.s && c.r + c.s >= g.r + g.s; });
}

MinimalityReport minimality(const IdealSpec& spec) {
  check_spec(spec);
  const auto& g = spec.gens;
  MinimalityReport rep;
  rep.inequality = true;
  int ssum = g[0].s;
  for (std::size_t j = 1; j < g.size(); ++j) {
    ssum += g[j].s;
    if (ssum > g[0].r - g[j].r) rep.inequality = false;
  }
  rep.irredundant = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    IdealSpec others;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (k != i) others.gens.push_back(g[k]);
    if (contains_component(others, g[i])) rep.irredundant = false;
  }
  return rep;
}

bool validate_minimal(const IdealSpec& spec) { return minimality(spec).minimal(); }

std::vector<ComponentLabel> quotient_components(const IdealSpec& spec) {
  int bound = -1;  // every survivor has r + s < bound
  for (auto g : spec.gens)
    if (g.s == 0) bound = std::max(bound, g.r);
  if (bound < 0) throw InfiniteCodimension("no pure z1 power among the generators: " + to_string(spec));
  std::vector<ComponentLabel> out;
  for (int r = 0; r < bound; ++r)
    for (int s = 0; r + s < bound; ++s)
      if (!contains_component(spec, {r, s})) out.push_back({r, s});
  std::sort(out.begin(), out.end(), [](ComponentLabel a, ComponentLabel b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.r > b.r;
  });
  return out;
}

std::size_t codimension(const IdealSpec& spec) {
  std::size_t total = 0;
  for (auto c : quotient_components(spec)) total += c.dim();
  return total;
}

std::optional<std::vector<ComponentLabel>> sinks_formula(const IdealSpec& spec) {
  check_spec(spec);
  const auto& g = spec.gens;
  std::vector<ComponentLabel> out;
  int r = g[0].r;
  for (std::size_t j = 1; j < g.size(); ++j) {
    r -= g[j].s;
    if (r < 0 || g[j].s - 1 < 0) return std::nullopt;
    out.push_back({r, g[j].s - 1});
  }
  int last = g.back().s + g.back().r - 1;
  if (last < 0) return std::nullopt;
  out.push_back({0, last});
  return out;
}

std::vector<ComponentLabel> sinks_graph(const IdealSpec& spec) {
  auto comps = quotient_components(spec);
  int top = 0;
  for (auto c : comps) top = std::max(top, c.degree());
  for (auto g : spec.gens) top = std::max(top, g.degree() - 1);
  IdealOracle oracle(spec, top + 1);
  std::vector<ComponentLabel> out;
  for (auto c : comps) {
    bool combinatorial = contains_component(spec, {c.r + 1, c.s}) &&
                         (c.r == 0 || contains_component(spec, {c.r - 1, c.s + 1}));
    bool certified = true;
    Subspace span = component_span(c);
    const Subspace& next = oracle.at(c.degree() + 1);
    for (int var = 0; var < 4 && certified; ++var)
      for (const auto& b : span.basis())
        if (!next.contains(mult_matrix(var, c.degree(), {0, 0}).apply(b))) {
          certified = false;
          break;
        }
    if (combinatorial != certified)
      throw VerificationFailed("sink test disagrees with the quotient for " + to_string(spec));
    if (certified) out.push_back(c);
  }
  return out;
}

namespace {

void extend(std::vector<ComponentLabel>& gens, std::vector<IdealSpec>& out) {
  out.push_back({gens});
  ComponentLabel last = gens.back();
  int bound = last.r + last.s;  // next generator needs r + s < bound
  for (int s = last.s + 1; s < bound; ++s)
    for (int r = 0; r + s < bound; ++r) {
      gens.push_back({r, s});
      extend(gens, out);
      gens.pop_back();
    }
}

}  // namespace

std::vector<IdealSpec> enumerate_ideals(std::size_t max_codim) {
  if (max_codim < 1) throw Error("max_codim must be at least 1");
  std::vector<IdealSpec> all;
  // The components [r,0], r < r1, always survive.
  std::size_t floor = 0;
  for (int r1 = 1;; ++r1) {
    floor += static_cast<std::size_t>(r1 * r1);
    if (floor > max_codim) break;
    std::vector<ComponentLabel> gens{{r1, 0}};
    extend(gens, all);
  }
  std::vector<std::pair<std::size_t, IdealSpec>> keyed;
  for (auto& s : all) {
    std::size_t c = codimension(s);
    if (c <= max_codim) keyed.emplace_back(c, std::move(s));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<IdealSpec> out;
  out.reserve(keyed.size());
  for (auto& [c, s] : keyed) out.push_back(std::move(s));
  return out;
}

// --- oracle -------------------------------------------------------------------

IdealPerDegree generate_ideal(IrrepLabel target, const std::vector<std::pair<int, SparseVec>>& gens, int degree_cap) {
  IdealPerDegree out;
  for (int d = 0; d <= degree_cap; ++d) {
    const std::size_t n = space_dim(d, target);
    std::vector<SparseVec> vs;
    if (d > 0) {
      const Subspace& prev = out.per_degree.at(d - 1);
      for (int var = 0; var < 4; ++var)
        for (const auto& b : prev.basis()) vs.push_back(mult_matrix(var, d - 1, target).apply(b));
    }
    std::vector<SparseVec> fresh;
    for (const auto& [gd, v] : gens)
      if (gd == d) fresh.push_back(v);
    Subspace s = Subspace::span(n, vs);
    if (!fresh.empty()) s = s.sum(g0_closure(fresh, d, target));
    bool full = s.is_full();
    out.per_degree.emplace(d, std::move(s));
    if (full) {
      // Fullness propagates upward and swallows any later generators.
      out.saturation = d;
      break;
    }
  }
  return out;
}

IdealOracle::IdealOracle(IdealSpec spec, int degree_cap) : spec_(std::move(spec)), cap_(degree_cap) {
  int maxdeg = 0;
  for (auto g : spec_.gens) maxdeg = std::max(maxdeg, g.degree());
  if (degree_cap < maxdeg)
    throw Error("degree cap " + std::to_string(degree_cap) + " is below the generator degree " + std::to_string(maxdeg));
  std::vector<std::pair<int, SparseVec>> gens;
  for (auto g : spec_.gens) gens.emplace_back(g.degree(), coords(component_hw(g), g.degree()));
  auto ideal = generate_ideal({0, 0}, gens, degree_cap);
  saturation_ = ideal.saturation;
  per_degree_ = std::move(ideal.per_degree);
  if (saturation_)
    for (int d = *saturation_ + 1; d <= cap_; ++d) per_degree_.emplace(d, Subspace::full(monomial_count(d)));
}

bool IdealOracle::contains(ComponentLabel c) const {
  if (c.degree() > cap_) {
    if (saturation_) return true;
    throw Error("component beyond the oracle's degree cap");
  }
  return at(c.degree()).contains(component_span(c));
}

std::size_t IdealOracle::codimension() const {
  if (!saturation_) throw NotFiniteDimensional("ideal " + to_string(spec_) + " not saturated by degree " + std::to_string(cap_));
  std::size_t total = 0;
  for (int d = 0; d <= *saturation_; ++d) total += monomial_count(d) - per_degree_.at(d).dim();
  return total;
}

IdealOracle ideal_oracle(const IdealSpec& spec, int degree_cap) { return IdealOracle(spec, degree_cap); }

bool oracle_agrees(const IdealSpec& spec) {
  int top = 0;
  for (auto c : quotient_components(spec)) top = std::max(top, c.degree());
  for (auto g : spec.gens) top = std::max(top, g.degree());
  IdealOracle oracle(spec, top + 1);
  if (!oracle.saturation_degree() || oracle.codimension() != codimension(spec)) return false;
  for (int d = 0; d <= top + 1; ++d)
    for (auto c : degree_components(d))
      if (oracle.contains(c) != contains_component(spec, c)) return false;
  return true;
}

nlohmann::json to_json(const IdealSpec& spec) {
  nlohmann::json out = nlohmann::json::array();
  for (auto g : spec.gens) out.push_back({g.r, g.s});
  return out;
}

IdealSpec ideal_from_json(const nlohmann::json& j) {
  IdealSpec s;
  for (const auto& p : j) s.gens.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return s;
}

std::string to_string(const IdealSpec& spec) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < spec.gens.size(); ++i)
    os << (i ? "," : "") << "(" << spec.gens[i].r << "," << spec.gens[i].s << ")";
  os << "}";
  return os.str();
}

}  // namespace poincare
