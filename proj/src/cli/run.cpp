#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "liefix/cli.hpp"

namespace liefix::cli {

namespace {

struct Flags {
  std::uint64_t seed = 0;
  unsigned long order_bound = 1000;
  unsigned precision = 30;
  unsigned conductor_limit = 1000;
  bool plain = false;
};

struct Inputs {
  std::string algebra;
  std::string matrix;
  bool list = false;
  bool verify = false;
  std::optional<std::size_t> dim;
};

Json header(const std::string& verb) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["verb"] = verb;
  return doc;
}

void merge(Json& doc, const Json& body) {
  for (const auto& [k, v] : body.items()) doc[k] = v;
}

Json algebra_summary(const LieAlgebra& g) {
  return Json{{"name", g.name()}, {"dim", g.dim()}, {"conductor", g.conductor()}};
}

Json analyze(const Inputs& in, const Flags& f) {
  LieAlgebra g = algebra_from_json(read_json_file(in.algebra), f.conductor_limit);
  Json doc = header("analyze");
  doc["algebra"] = algebra_summary(g);
  merge(doc, analysis_to_json(g));
  return doc;
}

Json fpf(const Inputs& in, const Flags& f) {
  Json input = read_json_file(in.algebra);
  Json doc = header("fpf");
  LieAlgebra g;
  if (input.is_object() && input.contains("algebra")) {
    // Explicit almost abelian presentation: the ideal and complement are checked
    // before the decision runs.
    g = algebra_from_json(input["algebra"], f.conductor_limit);
    if (!input.contains("ideal_rows") || !input.contains("v"))
      throw Error(ErrorKind::Parse, "presentation needs \"ideal_rows\" and \"v\"");
    const Json& rows = input["ideal_rows"];
    if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::Parse, "ideal_rows: expected a non-empty array");
    Json m;
    m["rows"] = rows.size();
    m["cols"] = g.dim();
    m["conductor"] = g.conductor();
    m["entries"] = rows;
    FieldMatrix ideal = matrix_from_json(m, f.conductor_limit);
    Json vm;
    vm["rows"] = 1;
    vm["cols"] = g.dim();
    vm["conductor"] = g.conductor();
    vm["entries"] = Json::array({input["v"]});
    FieldMatrix v = matrix_from_json(vm, f.conductor_limit);
    make_presentation(g, ideal, v.row(0));
    doc["presentation"] = "validated";
  } else {
    g = algebra_from_json(input, f.conductor_limit);
  }
  RouterOptions opts;
  opts.seed = f.seed;
  opts.order_bound = f.order_bound;
  opts.digits = f.precision;
  FpfDecision d = route_fpf(g, opts);
  doc["algebra"] = algebra_summary(g);
  merge(doc, decision_to_json(d, g.conductor(), f.precision));
  return doc;
}

Json verify_aut(const Inputs& in, const Flags& f) {
  LieAlgebra g = algebra_from_json(read_json_file(in.algebra), f.conductor_limit);
  FieldMatrix phi = matrix_from_json(read_json_file(in.matrix), f.conductor_limit);
  if (phi.rows() != g.dim() || phi.cols() != g.dim())
    throw Error(ErrorKind::DimensionMismatch, "matrix is " + std::to_string(phi.rows()) + "x" +
                                                  std::to_string(phi.cols()) + ", algebra has dim " +
                                                  std::to_string(g.dim()));
  Json doc = header("verify-aut");
  doc["algebra"] = algebra_summary(g);
  doc["witness"] = automorphism_to_json(check_automorphism(g, phi, f.order_bound), g.conductor(), f.precision);
  return doc;
}

Json cyclotomic(const Inputs& in, const Flags& f) {
  FieldMatrix a = matrix_from_json(read_json_file(in.matrix), f.conductor_limit);
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix must be square");
  Json doc = header("cyclotomic");
  merge(doc, cyclotomic_to_json(cyclotomic_report(a), a.conductor()));
  return doc;
}

Json catalog(const Inputs& in, const Flags&) {
  if (in.list == in.verify) throw Error(ErrorKind::Parse, "catalog needs exactly one of --list or --verify");
  if (in.list && in.dim) throw Error(ErrorKind::Parse, "--dim goes with --verify");
  Json doc = header("catalog");
  if (in.list) {
    doc["mode"] = "list";
    merge(doc, catalog_list_json());
  } else {
    doc["mode"] = "verify";
    merge(doc, catalog_report_json(verify_catalog(in.dim)));
  }
  return doc;
}

std::string render(const Json& doc, bool plain) { return plain ? to_plain(doc) : doc.dump(2) + "\n"; }

}  // namespace

Output run(const std::vector<std::string>& args) {
  Flags flags;
  Inputs in;
  CLI::App app{"Fixed-point-free automorphisms of Lie algebras over cyclotomic fields", "liefix"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_flags = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };
  app.add_option("--seed", flags.seed, "Seed for every randomized step");
  app.add_option("--order-bound", flags.order_bound, "Largest order searched for a witness")
      ->check(CLI::Range(1ul, 1000000ul));
  app.add_option("--precision", flags.precision, "Decimal digits for numeric witnesses")
      ->check(CLI::Range(5u, 2000u));
  app.add_option("--conductor-limit", flags.conductor_limit, "Largest conductor accepted in input")
      ->check(CLI::Range(1u, 1000000u));
  auto* plain = app.add_flag("--plain", flags.plain, "Print path: value lines instead of JSON");
  app.add_flag("--json", "JSON output (default)")->excludes(plain);

  auto* analyze_cmd = add_flags(app.add_subcommand("analyze", "Structure report for an algebra"));
  analyze_cmd->add_option("algebra", in.algebra, "Algebra JSON file")->required();
  auto* fpf_cmd = add_flags(app.add_subcommand("fpf", "Decide whether an f.p.f. automorphism exists"));
  fpf_cmd->add_option("input", in.algebra, "Algebra JSON or almost abelian presentation")->required();
  auto* verify_cmd = add_flags(app.add_subcommand("verify-aut", "Check a matrix as an automorphism"));
  verify_cmd->add_option("algebra", in.algebra, "Algebra JSON file")->required();
  verify_cmd->add_option("matrix", in.matrix, "Matrix JSON file")->required();
  auto* cyc_cmd = add_flags(app.add_subcommand("cyclotomic", "Admissible n for the n-cyclotomic property"));
  cyc_cmd->add_option("matrix", in.matrix, "Matrix JSON file")->required();
  auto* cat_cmd = add_flags(app.add_subcommand("catalog", "List or verify the built-in catalog"));
  cat_cmd->add_flag("--list", in.list, "Dump every sampled entry");
  cat_cmd->add_flag("--verify", in.verify, "Recompute every entry and family");
  cat_cmd->add_option("--dim", in.dim, "Restrict verification to one dimension")->check(CLI::Range(1, 20));

  Output result;
  std::string verb = "none";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitInvalidInput;
    return result;
  }

  try {
    Json doc;
    if (analyze_cmd->parsed()) {
      verb = "analyze";
      doc = analyze(in, flags);
    } else if (fpf_cmd->parsed()) {
      verb = "fpf";
      doc = fpf(in, flags);
    } else if (verify_cmd->parsed()) {
      verb = "verify-aut";
      doc = verify_aut(in, flags);
    } else if (cyc_cmd->parsed()) {
      verb = "cyclotomic";
      doc = cyclotomic(in, flags);
    } else {
      verb = "catalog";
      doc = catalog(in, flags);
    }
    doc["exit_code"] = kExitOk;
    result.out = render(doc, flags.plain);
    return result;
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    Json doc = header(verb);
    doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    doc["exit_code"] = result.exit_code;
    result.out = render(doc, flags.plain);
    result.err = "liefix: " + std::string(to_string(e.kind())) + ": " + e.what() + "\n";
  } catch (const std::bad_alloc&) {
    result.exit_code = kExitResource;
    Json doc = header(verb);
    doc["error"] = {{"kind", "ResourceLimit"}, {"message", "out of memory"}};
    doc["exit_code"] = result.exit_code;
    result.out = render(doc, flags.plain);
    result.err = "liefix: out of memory\n";
  }
  return result;
}

}  // namespace liefix::cli
