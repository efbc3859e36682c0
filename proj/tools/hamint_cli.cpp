#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamint/complex.hpp"
#include "hamint/dfi/groebner.hpp"
#include "hamint/families.hpp"
#include "hamint/hamiltonicity.hpp"
#include "hamint/hierarchy.hpp"
#include "hamint/json_io.hpp"
#include "hamint/oracle.hpp"
#include "hamint/theorems.hpp"

namespace {

using namespace hamint;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kHypothesisFailure = 2;
constexpr int kInternalError = 3;

struct Options {
  int cap = 10;
  std::uint64_t seed = 0;
  std::string field = "rational";
  std::string labeling;
  std::string file;
  std::string property;
  std::string theorem;
  std::string name;
  std::vector<int> params;
  bool list = false;
  int gb_max_n = dfi::GBOptions{}.max_n;
  int gb_max_facets = dfi::GBOptions{}.max_facets;
};

class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

SearchOptions search_options(const Options& o) { return SearchOptions{o.cap}; }

Labeling labeling_or_identity(const Options& o, const Complex& c) {
  return o.labeling.empty() ? Labeling::identity(c.n()) : parse_labeling(o.labeling, c.n());
}

Json verified(const Complex& c, const std::optional<PathCertificate>& cert) {
  if (!cert) return nullptr;
  std::string reason;
  if (!verify_certificate(c, *cert, &reason)) throw VerificationFailure("certificate failed verification: " + reason);
  return to_json(*cert);
}

Json outcome_json(const Complex& c, const TheoremOutcome& t) {
  Json j = to_json(t);
  j["certificate"] = verified(c, t.certificate);
  return j;
}

int cmd_analyze(const Options& o) {
  Complex c = read_complex_file(o.file);
  HierarchyReport r = full_report(c, search_options(o));
  for (const auto& e : r.entries) {
    if (e.witness && !check_with(c, *e.witness, e.property).holds) {
      throw VerificationFailure("witness for " + to_string(e.property) + " failed re-validation");
    }
  }
  print(to_json(r));
  return kOk;
}

int cmd_check(const Options& o) {
  Complex c = read_complex_file(o.file);
  AnyProperty p = any_property_from_string(o.property);
  Labeling l = labeling_or_identity(o, c);
  Json j = {{"property", to_string(p)}, {"labeling", to_json(l)}};
  if (const auto* h = std::get_if<HierarchyProperty>(&p)) {
    PredicateResult r = check_with(c, l, *h);
    j["holds"] = r.holds;
    j["violation"] = r.violation ? to_json(*r.violation) : Json(nullptr);
  } else {
    auto cert = certify_with(c, l, std::get<TraceProperty>(p));
    j["holds"] = cert.has_value();
    j["certificate"] = verified(c, cert);
  }
  print(j);
  return kOk;
}

int cmd_search(const Options& o) {
  Complex c = read_complex_file(o.file);
  AnyProperty p = any_property_from_string(o.property);
  Json j = {{"property", to_string(p)}};
  if (const auto* h = std::get_if<HierarchyProperty>(&p)) {
    auto l = search_hierarchy_labeling(c, *h, search_options(o));
    if (l && !check_with(c, *l, *h).holds) throw VerificationFailure("search witness failed re-validation");
    j["found"] = l.has_value();
    j["labeling"] = l ? to_json(*l) : Json(nullptr);
  } else {
    auto cert = search_labeling(c, std::get<TraceProperty>(p), search_options(o));
    j["found"] = cert.has_value();
    j["certificate"] = verified(c, cert);
  }
  print(j);
  return kOk;
}

int cmd_certify(const Options& o) {
  Complex c = read_complex_file(o.file);
  const std::string& t = o.theorem;
  if (t == "bertossi") {
    std::optional<Labeling> given;
    if (!o.labeling.empty()) given = parse_labeling(o.labeling, c.n());
    BertossiReport r = bertossi_bidirectional(c, given, search_options(o));
    Json j = to_json(r);
    j["certificate"] = verified(c, r.certificate);
    print(j);
    return r.labeling ? kOk : kHypothesisFailure;
  }
  TheoremOutcome out;
  Json extra = Json::object();
  if (t == "ore") {
    out = ore_weak_hamiltonian(c, labeling_or_identity(o, c));
  } else if (t == "ore-disjoint") {
    out = ore_disjoint_ridges(c, labeling_or_identity(o, c));
  } else if (t == "dirac") {
    out = dirac_check(c, labeling_or_identity(o, c));
  } else if (t == "posa") {
    out = posa_weak_hamiltonian(c, PosaOptions{8, search_options(o)});
  } else if (t == "ore2") {
    std::optional<QuasiTraceableWitness> w;
    if (!o.labeling.empty()) {
      Labeling l = parse_labeling(o.labeling, c.n());
      for (int j = 1; j <= c.n() - c.d() && !w; ++j) {
        if (auto which = quasi_traceable_case(c, l, j)) w = QuasiTraceableWitness{l, j, *which};
      }
    } else {
      w = quasi_traceable_detect(c, search_options(o));
    }
    if (!w) {
      print({{"theorem", "ore2"},
             {"hypotheses_hold", false},
             {"hypotheses", {{{"name", "quasi-traceable"}, {"holds", false}, {"detail", "no quasi-traceable witness"}}}},
             {"certificate", nullptr},
             {"trace", Json::array()}});
      return kHypothesisFailure;
    }
    out = ore2_weakly_traceable(c, *w);
    extra["witness"] = to_json(*w);
  } else if (t == "chch") {
    Labeling l = labeling_or_identity(o, c);
    out = chch_hamiltonian(c, l);
    extra["conditions"] = to_json(chch_conditions(c, l));
  } else {
    throw RangeError("unknown theorem '" + t + "' (ore, ore-disjoint, dirac, posa, ore2, bertossi, chch)");
  }
  Json j = outcome_json(c, out);
  j.update(extra);
  print(j);
  return out.hypotheses_hold() && out.certificate ? kOk : kHypothesisFailure;
}

int cmd_family(const Options& o) {
  if (o.list) {
    for (const auto& n : families::family_names()) std::cout << n << "\n";
    return kOk;
  }
  if (o.name.empty()) throw RangeError("family name required (use --list)");
  std::cout << format_complex(families::make(o.name, o.params));
  return kOk;
}

template <class F>
int dfi_run(const std::string& action, const Complex& c, const Options& o) {
  dfi::GBOptions gb;
  gb.max_n = o.gb_max_n;
  gb.max_facets = o.gb_max_facets;
  Json j = {{"field", dfi::field_name(static_cast<const F*>(nullptr))}};
  if (action == "gens") {
    for (const auto& g : dfi::dfi_generators<F>(c)) std::cout << g.to_string() << "\n";
    return kOk;
  }
  if (action == "gbcheck") {
    j.update(dfi::to_json(dfi::gb_check_minors<F>(c, gb)));
  } else if (action == "initial") {
    j.update(dfi::to_json(dfi::initial_terms<F>(c, gb)));
  } else if (action == "gbac") {
    j.update(dfi::to_json(dfi::gbac_consequence_check<F>(c, gb)));
  } else {
    throw RangeError("unknown dfi action '" + action + "' (gens, gbcheck, initial, gbac)");
  }
  print(j);
  return kOk;
}

int cmd_dfi(const std::string& action, const Options& o) {
  Complex c = read_complex_file(o.file);
  if (o.field == "rational") return dfi_run<dfi::Rational>(action, c, o);
  if (o.field == "prime") return dfi_run<dfi::Prime>(action, c, o);
  throw RangeError("unknown field '" + o.field + "' (rational, prime)");
}

int cmd_oracle(const Options& o) {
  Complex c = read_complex_file(o.file);
  AnyProperty p = any_property_from_string(o.property);
  OracleResult r = oracle(c, p);
  Json j = {{"property", to_string(p)}};
  j.update(to_json(r));
  print(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity and interval hierarchy tools for pure simplicial complexes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cap", o.cap, "largest vertex count for exhaustive labeling searches")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized corpus generation (unused by analysis commands)");

  auto* analyze = app.add_subcommand("analyze", "hierarchy report with witnesses and violations");
  analyze->add_option("file", o.file)->required();

  auto* check = app.add_subcommand("check", "check a property under a fixed labeling");
  check->add_option("property", o.property)->required();
  check->add_option("file", o.file)->required();
  check->add_option("--labeling", o.labeling, "new labels of vertices 1..n, comma separated");

  auto* search = app.add_subcommand("search", "search for a labeling with a property");
  search->add_option("property", o.property)->required();
  search->add_option("file", o.file)->required();

  auto* certify = app.add_subcommand("certify", "run a constructive theorem and emit its outcome");
  certify->add_option("theorem", o.theorem, "ore, ore-disjoint, dirac, posa, ore2, bertossi, chch")->required();
  certify->add_option("file", o.file)->required();
  certify->add_option("--labeling", o.labeling, "labeling to start from");

  auto* family = app.add_subcommand("family", "print a named complex");
  family->add_option("name", o.name);
  family->add_option("params", o.params);
  family->add_flag("--list", o.list, "list families and examples");

  auto* dfi_cmd = app.add_subcommand("dfi", "determinantal facet ideal tools");
  dfi_cmd->require_subcommand(1);
  dfi_cmd->add_option("--field", o.field, "rational or prime")->capture_default_str();
  dfi_cmd->add_option("--gb-max-n", o.gb_max_n, "vertex cap for Groebner checks")->capture_default_str();
  dfi_cmd->add_option("--gb-max-facets", o.gb_max_facets, "facet cap for Groebner checks")->capture_default_str();
  std::map<std::string, CLI::App*> dfi_actions;
  for (const char* a : {"gens", "gbcheck", "initial", "gbac"}) {
    auto* sub = dfi_cmd->add_subcommand(a);
    sub->add_option("file", o.file)->required();
    dfi_actions[a] = sub;
  }

  auto* oracle_cmd = app.add_subcommand("oracle", "ground truth by enumerating all labelings (n <= 7)");
  oracle_cmd->add_option("property", o.property)->required();
  oracle_cmd->add_option("file", o.file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*check) return cmd_check(o);
    if (*search) return cmd_search(o);
    if (*certify) return cmd_certify(o);
    if (*family) return cmd_family(o);
    if (*oracle_cmd) return cmd_oracle(o);
    for (const auto& [name, sub] : dfi_actions) {
      if (*sub) return cmd_dfi(name, o);
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const hamint::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}
