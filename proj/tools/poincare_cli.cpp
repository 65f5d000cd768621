// poincare: command-line front end.
//
//   poincare classify-ideals --max-codim 6
//   poincare build-rep --source 0,0 --gens "z1^2,z1*det" --format dot
//   poincare family --params 1,0,0,1 --compare 1,0,0,2
//   poincare super-triples --i7 z1 --bound 20
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "poincare/error.hpp"
#include "poincare/ideal.hpp"
#include "poincare/parse.hpp"
#include "poincare/rep.hpp"
#include "poincare/super.hpp"

using namespace poincare;
using nlohmann::json;

namespace {

struct RunConfig {
  int degree_cap = kDefaultDegreeCap;
  std::string out;
  std::string format = "json";
};

// Writes to --out if given, else stdout. LF only.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json labels_json(const std::vector<ComponentLabel>& v) {
  json j = json::array();
  for (auto c : v) j.push_back(c);
  return j;
}

int cmd_classify(const RunConfig& cfg, std::size_t max_codim) {
  if (max_codim < 1) throw Error("--max-codim must be at least 1");
  Sink sink(cfg.out);
  int rc = 0;
  for (const auto& spec : enumerate_ideals(max_codim)) {
    json line;
    line["gens"] = to_json(spec);
    line["codim"] = codimension(spec);
    auto comps = quotient_components(spec);
    line["components"] = labels_json(comps);
    auto graph = sinks_graph(spec);
    line["sinks_graph"] = labels_json(graph);
    auto formula = sinks_formula(spec);
    line["sinks_formula"] = formula ? labels_json(*formula) : json(nullptr);
    line["discrepancy"] = !formula || *formula != graph;
    bool agrees = oracle_agrees(spec);
    line["oracle_agrees"] = agrees;
    if (!agrees) rc = 1;
    sink.os() << line.dump() << '\n';
  }
  return rc;
}

int cmd_build_rep(const RunConfig& cfg, const std::string& source_text, const std::string& gens_text) {
  IrrepLabel source = parse_label(source_text);
  auto gens = parse_generators(gens_text, source);
  QuotientModule q = build_quotient(source, gens, cfg.degree_cap);
  RepMatrices m = rep_matrices(q);
  if (!verify_lie_relations(m)) {
    std::cerr << "poincare: relations fail on the constructed matrices\n";
    return 1;
  }
  ComponentGraph g = component_graph(m);
  Sink sink(cfg.out);
  if (cfg.format == "dot") {
    sink.os() << to_dot(g);
  } else {
    json j;
    j["source"] = source;
    j["gens"] = gens_text;
    j["dim"] = m.dim;
    j["saturation"] = q.saturation;
    j["matrices"] = to_json(m);
    j["graph"] = to_json(g);
    j["relations_ok"] = true;
    sink.os() << j.dump(1) << '\n';
  }
  return 0;
}

json member_report(const FamilySpec& f, bool& all_ok) {
  RepMatrices m = build_family(f);
  bool ok = verify_lie_relations(m);
  all_ok = all_ok && ok;
  auto rep = indecomposability(m);
  json j;
  j["params"] = json::array();
  for (const auto& p : f.params) j["params"].push_back(to_string(p));
  j["dim"] = m.dim;
  j["relations_ok"] = ok;
  j["commutant_dim"] = rep.commutant_dim;
  j["radical_dim"] = rep.radical_dim;
  j["quotient_commutative"] = rep.quotient_commutative;
  j["indecomposable"] = rep.indecomposable();
  return j;
}

int cmd_family(const RunConfig& cfg, const std::string& sources, const std::string& sinks,
               const std::string& params, const std::string& compare) {
  auto src = parse_labels(sources);
  auto snk = parse_labels(sinks);
  if (src.size() != 2 || snk.size() != 2) throw Error("the family needs two sources and two sinks");
  FamilySpec f{src[0], src[1], snk[0], snk[1], parse_params(params)};
  bool ok = true;
  json j;
  j["sources"] = src;
  j["sinks"] = snk;
  j["members"] = json::array({member_report(f, ok)});
  if (!compare.empty()) {
    FamilySpec f2 = f;
    f2.params = parse_params(compare);
    j["members"].push_back(member_report(f2, ok));
    j["equivalent"] = family_equivalence(f, f2);
  }
  Sink sink(cfg.out);
  sink.os() << j.dump() << '\n';
  return ok ? 0 : 1;
}

int cmd_super_triples(const RunConfig& cfg, const std::string& i7_text, std::size_t bound) {
  IdealSpec i7 = parse_ideal_spec(i7_text);
  Sink sink(cfg.out);
  int rc = 0;
  for (const auto& t : enumerate_triples(i7, bound)) {
    auto inv = super_invariance(t, cfg.degree_cap);
    URestRep r = build_urest_rep(t, cfg.degree_cap);
    bool ok = inv.invariant && super_verify_relations(r);
    if (!ok) rc = 1;
    json line = to_json(t);
    line["codims"] = {codimension(t.i1), codimension(t.i4), codimension(t.i7)};
    line["quotient_dim"] = inv.quotient_dim;
    line["block_dims"] = r.block_dims;
    line["certified"] = ok;
    sink.os() << line.dump() << '\n';
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact indecomposable representations of the Poincare algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--degree-cap", cfg.degree_cap, "Largest polynomial degree examined")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::size_t max_codim = 0;
  auto* classify = app.add_subcommand("classify-ideals", "Invariant ideals of C[z] by codimension, one JSON line each");
  classify->add_option("--max-codim", max_codim)->required();
  classify->add_option("--out", cfg.out);

  std::string source = "0,0", gens;
  auto* build = app.add_subcommand("build-rep", "Quotient P(V0)/I as matrices (json) or component graph (dot)");
  build->add_option("--source", source, "V0 as \"a,b\" (doubled spins)")->capture_default_str();
  build->add_option("--gens", gens, "Generators, e.g. \"z1^2,z1*det\" or \"hw(2)\"")->required();
  build->add_option("--out", cfg.out);
  build->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  std::string sources = "1,0;1,0", sinks = "2,1;0,1", params, compare;
  auto* family = app.add_subcommand("family", "Indecomposability and equivalence of family members");
  family->add_option("--sources", sources)->capture_default_str();
  family->add_option("--sinks", sinks)->capture_default_str();
  family->add_option("--params", params, "alpha,beta,gamma,delta")->required();
  family->add_option("--compare", compare, "Second parameter point");
  family->add_option("--out", cfg.out);

  std::string i7 = "z1";
  std::size_t bound = 20;
  auto* triples = app.add_subcommand("super-triples", "Invariant ideal triples of the super model");
  triples->add_option("--i7", i7)->capture_default_str();
  triples->add_option("--bound", bound)->capture_default_str();
  triples->add_option("--out", cfg.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(cfg, max_codim);
    if (*build) return cmd_build_rep(cfg, source, gens);
    if (*family) return cmd_family(cfg, sources, sinks, params, compare);
    if (*triples) return cmd_super_triples(cfg, i7, bound);
  } catch (const VerificationFailed& e) {
    std::cerr << "poincare: verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "poincare: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
