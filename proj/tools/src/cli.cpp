#include "plie_cli/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "plie_cli/document.hpp"
#include "plie_cli/render.hpp"

namespace plie::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string file;
  int dim = 3;
  std::string flags = "cocycle,flat";
  std::string lambda = "1";
  std::string catalog_action;
  std::string name;
  int points = 100;
  double step = 1e-4;
  double tol = 1e-5;
  std::uint64_t seed = 20240101;
  int pairs = 0;
};

bool machine(const Options& o) { return o.format == "machine"; }

void emit(std::ostream& out, const Options& o, const std::string& command, json body, const std::string& text) {
  if (machine(o)) {
    json doc{{"schema", kSchemaVersion}, {"command", command}};
    doc.update(body);
    out << compact_dump(doc) << '\n';
  } else {
    out << text;
  }
}

int check_exit(const HawkinsReport& r) {
  if (!r.valid()) return kInvalidInput;
  if (!r.is_flat || !r.is_metaflat || r.volume.verdict == VolumeVerdict::Violated) return kViolated;
  if (r.volume.verdict == VolumeVerdict::NecessaryOnlyPassed) return kNecessaryOnly;
  return kSatisfied;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Triple triple = to_triple(read_document(o.file));
  const HawkinsReport r = full_report(triple);
  const int code = check_exit(r);
  emit(out, o, "check", {{"report", to_json(r)}, {"exit_code", code}}, render_text(r, triple.dual_algebra()));
  if (code == kInvalidInput) err << "input is not a Lie bialgebra\n";
  for (const auto& w : r.witnesses) err << w << '\n';
  return code;
}

int cmd_milnor(const Options& o, std::ostream& out) {
  const Triple triple = to_triple(read_document(o.file));
  const MilnorReport r = milnor_check(triple.algebra(), triple.metric);
  const FlatnessCheck flat = is_flat_metric(triple.algebra(), triple.metric);
  emit(out, o, "milnor", {{"report", to_json(r)}, {"flat_metric", flat.flat}},
       render_text(r, triple.algebra()) + "flat metric:    " + (flat.flat ? "yes" : "no") + "\n");
  return r.is_milnor ? kSatisfied : kViolated;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const ConstraintFlags flags = ConstraintFlags::parse(o.flags);
  const Rational lambda = Rational::parse(o.lambda);
  const LieAlgebra alg = o.dim == 3 ? milnor_dim3(lambda) : milnor_dim4();
  const CocycleSpace space = cocycle_space(alg, Metric::identity(alg.dim()), flags);
  const auto quad = quadratic_constraints(space);
  emit(out, o, "classify", {{"space", to_json(space, quad)}}, render_text(space, quad));
  return kSatisfied;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.catalog_action == "list") {
    json entries = json::array();
    std::string text;
    for (const auto& e : catalog()) {
      entries.push_back({{"name", e.name}, {"description", e.description}});
      text += e.name + "  " + e.description + "\n";
    }
    for (const auto& f : families()) {
      std::string params;
      for (const auto& p : f.parameters) params += (params.empty() ? "" : ",") + p;
      text += "family " + f.name + "(" + params + ")  " + f.description + "\n";
    }
    emit(out, o, "catalog-list", {{"entries", entries}}, text);
    return kSatisfied;
  }
  if (o.catalog_action == "verify" && o.name.empty()) {
    json all = json::array();
    std::string text;
    bool passed = true;
    for (const auto& e : catalog()) {
      const CatalogVerification v = verify_against(e);
      passed = passed && v.passed();
      all.push_back(to_json(v));
      text += render_text(v);
    }
    emit(out, o, "catalog-verify", {{"verifications", all}}, text);
    return passed ? kSatisfied : kViolated;
  }
  if (o.name.empty()) {
    err << "catalog " << o.catalog_action << ": missing entry name\n";
    return kInvalidInput;
  }
  if (o.catalog_action == "show") {
    const CatalogEntry& e = find_entry(o.name);
    json meta{{"name", e.name}, {"description", e.description}};
    if (e.reconstruction_note) meta["reconstruction"] = *e.reconstruction_note;
    // `show` always prints the input document so it can be fed back to `check`.
    out << serialize_document(from_triple(e.triple, meta));
    return kSatisfied;
  }
  if (o.catalog_action == "verify") {
    const CatalogVerification v = catalog_verify(o.name);
    emit(out, o, "catalog-verify", {{"verification", to_json(v)}}, render_text(v));
    return v.passed() ? kSatisfied : kViolated;
  }
  // family
  const Family& f = find_family(o.name);
  const FamilyReport r = verify_family(f, default_grid(f.parameters.size()));
  emit(out, o, "catalog-family", {{"family", to_json(r)}}, render_text(r));
  return kSatisfied;
}

int cmd_numcheck(const Options& o, std::ostream& out) {
  const numeric::CoordinateModel& model = numeric::find_model(o.name);
  const numeric::NumericTolerance tol{o.step, o.tol};
  tol.validate();
  const auto vol = numeric::check_volume_condition(model, o.points, tol, o.seed);
  json body{{"volume", to_json(vol)}};
  std::string text = render_text(vol);
  bool passed = vol.passed;
  if (o.pairs > 0) {
    const auto mult = numeric::check_multiplicativity(model, o.pairs, tol, o.seed);
    body["multiplicativity"] = to_json(mult);
    text += render_text(mult);
    passed = passed && mult.passed;
  }
  emit(out, o, "numcheck", body, text);
  return passed ? kSatisfied : kViolated;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks of Hawkins's conditions on Riemannian Poisson-Lie groups", "plie"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output rendering")->check(CLI::IsMember({"text", "machine"}));

  auto* check = app.add_subcommand("check", "Run every condition on a triple document");
  check->add_option("file", o.file, "Document path, or - for standard input")->required();

  auto* milnor = app.add_subcommand("milnor", "Milnor decomposition of the document's algebra and metric");
  milnor->add_option("file", o.file, "Document path, or - for standard input")->required();

  auto* classify = app.add_subcommand("classify", "Solve the linear constraints on cocycles of a Milnor algebra");
  classify->add_option("--dim", o.dim, "3 or 4")->check(CLI::IsMember({3, 4}));
  classify->add_option("--flags", o.flags, "Comma list of cocycle,flat,volume,unimodular");
  classify->add_option("--lambda", o.lambda, "Scale of the 3-dimensional algebra");

  auto* cat = app.add_subcommand("catalog", "Catalog of models");
  cat->add_option("action", o.catalog_action, "list | show | verify | family")
      ->required()
      ->check(CLI::IsMember({"list", "show", "verify", "family"}));
  cat->add_option("name", o.name, "Entry or family name");

  auto* num = app.add_subcommand("numcheck", "Finite-difference checks on a coordinate model");
  num->add_option("model", o.name, "Model name")->required();
  num->add_option("--points", o.points, "Sample points")->check(CLI::PositiveNumber);
  num->add_option("--step", o.step, "Finite-difference step");
  num->add_option("--tol", o.tol, "Absolute tolerance");
  num->add_option("--seed", o.seed, "Sampling seed");
  num->add_option("--pairs", o.pairs, "Also check multiplicativity on this many pairs");

  // Propagate --format placed after the subcommand as well.
  for (auto* sub : {check, milnor, classify, cat, num})
    sub->add_option("--format", o.format, "Output rendering")->check(CLI::IsMember({"text", "machine"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSatisfied;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*check) return cmd_check(o, out, err);
    if (*milnor) return cmd_milnor(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*cat) return cmd_catalog(o, out, err);
    return cmd_numcheck(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnknownNameError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInvalidInput;
}

}  // namespace plie::cli
