#include <fstream>
#include <sstream>

#include "liefix/cli.hpp"

namespace liefix::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, field + ": " + what);
}

// Collects the lcm of every conductor that will be written under one "z".
struct ConductorAcc {
  unsigned m = 1;
  void add(unsigned c) { m = static_cast<unsigned>(lcm_u(m, c == 0 ? 1 : c)); }
  void add(const CycScalar& s) { add(s.conductor()); }
  void add(const Vec& v) {
    for (const auto& s : v) add(s);
  }
  void add(const FieldMatrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) add(a.at(r, c));
  }
  void add(const Subspace& s) { add(s.basis()); }
  void add(const CycPolynomial& p) {
    for (const auto& c : p.coeffs()) add(c);
  }
};

std::string scalar_text(const CycScalar& s, unsigned m) { return s.str(m); }

Json vec_json(const Vec& v, unsigned m) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_text(s, m));
  return out;
}

Json rows_json(const FieldMatrix& a, unsigned m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(vec_json(a.row(r), m));
  return out;
}

Json subspace_json(const Subspace& s, unsigned m) {
  Json out;
  out["dim"] = s.dim();
  out["basis"] = rows_json(s.basis(), m);
  return out;
}

Json chain_json(const SubspaceChain& c, unsigned m) {
  Json out = Json::array();
  for (const auto& s : c.links) out.push_back(subspace_json(s, m));
  return out;
}

Json poly_json(const CycPolynomial& p, unsigned m) {
  std::vector<CycScalar> lifted;
  for (const auto& c : p.coeffs()) lifted.push_back(c.lifted(m));
  Json out;
  out["coeffs"] = vec_json(p.coeffs(), m);
  out["text"] = CycPolynomial(lifted).str();
  return out;
}

Json order_json(const OrderResult& o) {
  Json out;
  if (o.status == OrderStatus::Finite) {
    out["status"] = "finite";
    out["value"] = o.order;
  } else {
    out["status"] = "exceeds_bound";
    out["value"] = nullptr;
  }
  return out;
}

unsigned read_unsigned(const Json& j, const std::string& field, unsigned lo) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  long long v = j.get<long long>();
  if (v < static_cast<long long>(lo) || v > 1000000) fail(field, "out of range");
  return static_cast<unsigned>(v);
}

unsigned read_conductor(const Json& j, unsigned limit) {
  unsigned m = 1;
  if (j.contains("conductor")) m = read_unsigned(j["conductor"], "conductor", 1);
  if (m > limit)
    throw Error(ErrorKind::ResourceLimit,
                "conductor " + std::to_string(m) + " exceeds the limit " + std::to_string(limit));
  return m;
}

CycScalar read_scalar(const Json& j, unsigned m, const std::string& field) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<long long>());
  else
    fail(field, "expected a scalar string");
  try {
    return parse_scalar(text, m);
  } catch (const Error& e) {
    throw Error(e.kind(), field + ": " + e.what());
  }
}

// "i,j" with 1 <= i < j <= dim, returned 0-based.
std::pair<std::size_t, std::size_t> read_pair(const std::string& key, std::size_t dim) {
  const std::string field = "brackets.\"" + key + "\"";
  auto comma = key.find(',');
  if (comma == std::string::npos) fail(field, "key must look like \"i,j\"");
  std::size_t i = 0, j = 0;
  try {
    std::size_t used = 0;
    i = std::stoul(key.substr(0, comma), &used);
    if (used != key.substr(0, comma).size()) throw std::invalid_argument("trailing");
    j = std::stoul(key.substr(comma + 1), &used);
    if (used != key.substr(comma + 1).size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(field, "key must look like \"i,j\"");
  }
  if (i < 1 || j > dim || i >= j) fail(field, "indices must satisfy 1 <= i < j <= dim");
  return {i - 1, j - 1};
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Conductor:
    case ErrorKind::JacobiViolation:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DivisionByZero:
    case ErrorKind::SingularMatrix:
    case ErrorKind::SingularInput:
    case ErrorKind::UnknownName:
    case ErrorKind::BadParameters:
      return kExitInvalidInput;
    case ErrorKind::NotNilpotent:
    case ErrorKind::NotSimilar:
    case ErrorKind::NotSolvable:
    case ErrorKind::NotAlmostAbelian:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::NotFiliform:
    case ErrorKind::AdaptationFailed:
    case ErrorKind::NoNonsingularDerivation:
    case ErrorKind::NotDiagonalizableHere:
      return kExitUnsupported;
    case ErrorKind::SamplingExhausted:
    case ErrorKind::SplitFailure:
    case ErrorKind::ResourceLimit:
      return kExitResource;
  }
  return kExitResource;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse,
                path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

LieAlgebra algebra_from_json(const Json& j, unsigned conductor_limit) {
  if (!j.is_object()) fail("algebra", "expected an object");
  if (!j.contains("dim")) fail("dim", "missing");
  const std::size_t dim = read_unsigned(j["dim"], "dim", 1);
  const unsigned m = read_conductor(j, conductor_limit);
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  LieAlgebra::BracketTable table;
  if (j.contains("brackets")) {
    const Json& b = j["brackets"];
    if (!b.is_object()) fail("brackets", "expected an object");
    for (const auto& [key, coeffs] : b.items()) {
      auto ij = read_pair(key, dim);
      if (table.count(ij)) fail("brackets.\"" + key + "\"", "duplicate pair");
      if (!coeffs.is_object()) fail("brackets.\"" + key + "\"", "expected an object");
      Vec v = zero_vec(dim);
      for (const auto& [kkey, value] : coeffs.items()) {
        const std::string field = "brackets.\"" + key + "\".\"" + kkey + "\"";
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(kkey, &used);
          if (used != kkey.size()) k = 0;
        } catch (const std::exception&) {
          k = 0;
        }
        if (k < 1 || k > dim) fail(field, "index must be in 1..dim");
        v[k - 1] = read_scalar(value, m, field);
      }
      table[ij] = std::move(v);
    }
  }
  return LieAlgebra::validate(dim, table, name, m);
}

FieldMatrix matrix_from_json(const Json& j, unsigned conductor_limit) {
  if (!j.is_object()) fail("matrix", "expected an object");
  if (!j.contains("rows")) fail("rows", "missing");
  if (!j.contains("cols")) fail("cols", "missing");
  if (!j.contains("entries")) fail("entries", "missing");
  const std::size_t rows = read_unsigned(j["rows"], "rows", 1);
  const std::size_t cols = read_unsigned(j["cols"], "cols", 1);
  const unsigned m = read_conductor(j, conductor_limit);
  const Json& e = j["entries"];
  if (!e.is_array()) fail("entries", "expected an array of rows");
  if (e.size() != rows) fail("entries", "has " + std::to_string(e.size()) + " rows, expected " + std::to_string(rows));
  FieldMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string field = "entries[" + std::to_string(r) + "]";
    if (!e[r].is_array()) fail(field, "expected an array");
    if (e[r].size() != cols)
      fail(field, "has " + std::to_string(e[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      a.at(r, c) = read_scalar(e[r][c], m, field + "[" + std::to_string(c) + "]");
  }
  return a;
}

Json algebra_to_json(const LieAlgebra& g) {
  ConductorAcc acc;
  acc.add(g.conductor());
  const auto table = g.brackets();
  for (const auto& [ij, v] : table) acc.add(v);
  Json out;
  out["name"] = g.name();
  out["dim"] = g.dim();
  out["conductor"] = acc.m;
  Json b = Json::object();
  for (const auto& [ij, v] : table) {
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) coeffs[std::to_string(k + 1)] = scalar_text(v[k], acc.m);
    b[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = std::move(coeffs);
  }
  out["brackets"] = std::move(b);
  return out;
}

Json matrix_to_json(const FieldMatrix& a, unsigned conductor) {
  ConductorAcc acc;
  acc.add(conductor);
  acc.add(a);
  Json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["conductor"] = acc.m;
  out["entries"] = rows_json(a, acc.m);
  return out;
}

Json automorphism_to_json(const AutomorphismReport& r, unsigned conductor, unsigned digits) {
  ConductorAcc acc;
  acc.add(conductor);
  const bool exact = !r.numeric.has_value();
  if (exact) {
    acc.add(r.map);
    acc.add(r.det);
    acc.add(r.det_phi_minus_id);
  }
  Json out;
  out["certificate_kind"] = exact ? "exact" : "numeric";
  out["conductor"] = acc.m;
  out["matrix"] = exact ? matrix_to_json(r.map, acc.m) : Json(nullptr);
  out["is_morphism"] = r.is_morphism;
  out["is_fpf"] = r.is_fpf;
  out["certified"] = r.certified();
  out["det"] = exact ? Json(scalar_text(r.det, acc.m)) : Json(nullptr);
  out["det_phi_minus_id"] = exact ? Json(scalar_text(r.det_phi_minus_id, acc.m)) : Json(nullptr);
  out["order"] = order_json(r.order);
  if (!exact) {
    const NumericWitness& w = *r.numeric;
    Json num;
    num["digits"] = w.digits;
    num["scale"] = w.scale;
    num["morphism_residual"] = w.morphism_residual;
    num["min_eigen_gap"] = w.min_eigen_gap;
    num["det_phi_minus_id_abs"] = w.det_phi_minus_id_abs;
    Json entries = Json::array();
    for (std::size_t i = 0; i < w.map.n; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < w.map.n; ++k)
        row.push_back(Json{{"re", w.map.at(i, k).re.str(digits)}, {"im", w.map.at(i, k).im.str(digits)}});
      entries.push_back(std::move(row));
    }
    num["entries"] = std::move(entries);
    out["numeric"] = std::move(num);
  }
  return out;
}

Json decision_to_json(const FpfDecision& d, unsigned conductor, unsigned digits) {
  Json out;
  out["verdict"] = std::string(to_string(d.verdict));
  out["engine"] = d.engine;
  out["reason_code"] = d.reason_code;
  out["reason"] = d.reason;
  out["n"] = d.n ? Json(*d.n) : Json(nullptr);
  out["witness"] = d.witness ? automorphism_to_json(*d.witness, conductor, digits) : Json(nullptr);
  if (d.filiform) {
    const FiliformFacts& f = *d.filiform;
    out["cnla"] = f.cnla;
    out["nonsingular_derivation"] =
        f.nonsingular_derivation ? matrix_to_json(*f.nonsingular_derivation, conductor) : Json(nullptr);
    out["graded_type"] = f.graded_type;
    out["certificate_kind"] = f.certificate_kind.empty() ? Json(nullptr) : Json(f.certificate_kind);
    out["equivalent_statements"] = {{"not_cnla", f.not_cnla},
                                    {"has_nonsingular_derivation", f.has_nonsingular_derivation},
                                    {"is_derived_algebra", f.is_derived_algebra}};
  }
  return out;
}

Json analysis_to_json(const LieAlgebra& g) {
  const SubspaceChain derived = series(g, SeriesKind::Derived);
  const SubspaceChain lower = series(g, SeriesKind::LowerCentral);
  const SubspaceChain upper = series(g, SeriesKind::UpperCentral);
  const Subspace z = center(g);
  const UnimodularityReport u = unimodularity_report(g);

  ConductorAcc acc;
  acc.add(g.conductor());
  for (const auto* c : {&derived, &lower, &upper})
    for (const auto& s : c->links) acc.add(s);
  acc.add(z);
  acc.add(u.nilradical);
  for (const auto& s : u.nilradical_series) acc.add(s);
  acc.add(u.adjoint_traces);
  for (const auto& t : u.table) acc.add(t.trace);
  const unsigned m = acc.m;

  Json out;
  out["conductor"] = m;
  out["abelian"] = g.is_abelian();
  out["solvable"] = u.solvable;
  out["nilpotent"] = is_nilpotent(g);
  out["derived_series"] = chain_json(derived, m);
  out["lower_central_series"] = chain_json(lower, m);
  out["upper_central_series"] = chain_json(upper, m);
  out["center"] = subspace_json(z, m);
  out["nilradical"] = u.solvable ? subspace_json(u.nilradical, m) : Json(nullptr);
  Json ns = Json::array();
  for (const auto& s : u.nilradical_series) ns.push_back(subspace_json(s, m));
  out["nilradical_series"] = std::move(ns);

  Json uni;
  uni["unimodular"] = u.unimodular;
  uni["strongly_unimodular"] = u.strongly_unimodular;
  Json traces = Json::array();
  for (std::size_t i = 0; i < u.adjoint_traces.size(); ++i)
    traces.push_back(Json{{"basis_index", i + 1}, {"trace", scalar_text(u.adjoint_traces[i], m)}});
  uni["adjoint_traces"] = std::move(traces);
  Json table = Json::array();
  for (const auto& t : u.table)
    table.push_back(Json{{"basis_index", t.basis_index + 1}, {"level", t.level}, {"trace", scalar_text(t.trace, m)}});
  uni["trace_table"] = std::move(table);
  out["unimodularity"] = std::move(uni);
  return out;
}

Json cyclotomic_to_json(const CyclotomicReport& r, unsigned conductor) {
  ConductorAcc acc;
  acc.add(conductor);
  for (const auto& c : r.certificates) {
    for (const auto& p : c.factors) acc.add(p);
    for (const auto& p : c.scaled_factors) acc.add(p);
  }
  Json out;
  out["size"] = r.size;
  out["conductor"] = acc.m;
  out["admissible"] = r.admissible;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json cj;
    cj["n"] = c.n;
    Json f = Json::array(), s = Json::array();
    for (const auto& p : c.factors) f.push_back(poly_json(p, acc.m));
    for (const auto& p : c.scaled_factors) s.push_back(poly_json(p, acc.m));
    cj["invariant_factors"] = std::move(f);
    cj["scaled_invariant_factors"] = std::move(s);
    cj["nilpotent_blocks"] = c.nilpotent_blocks;
    certs.push_back(std::move(cj));
  }
  out["certificates"] = std::move(certs);
  return out;
}

namespace {

Json expected_json(const Expected& e) {
  Json out;
  out["solvable"] = e.solvable;
  out["nilpotent"] = e.nilpotent;
  out["unimodular"] = e.unimodular;
  out["strongly_unimodular"] = e.strongly_unimodular;
  out["fpf_exists"] = e.fpf_exists;
  out["strongly_unimodular_rule"] = e.strongly_unimodular_rule;
  out["fpf_rule"] = e.fpf_rule;
  return out;
}

Json params_json(const std::vector<CycScalar>& params, unsigned& conductor) {
  ConductorAcc acc;
  for (const auto& p : params) acc.add(p);
  conductor = acc.m;
  return vec_json(params, acc.m);
}

}  // namespace

Json catalog_list_json() {
  Json entries = Json::array();
  for (const auto& e : catalog_samples()) {
    Json ej;
    ej["label"] = e.label();
    ej["name"] = e.name;
    Json alg = algebra_to_json(e.algebra);
    unsigned m = alg["conductor"].get<unsigned>();
    for (const auto& p : e.params) m = static_cast<unsigned>(lcm_u(m, p.value.conductor()));
    Json params = Json::array();
    for (const auto& p : e.params) params.push_back(Json{{"name", p.name}, {"value", scalar_text(p.value, m)}});
    ej["params_conductor"] = m;
    ej["params"] = std::move(params);
    ej["algebra"] = std::move(alg);
    ej["expected"] = expected_json(e.expected);
    ej["automorphism_families"] = e.families;
    entries.push_back(std::move(ej));
  }
  Json out;
  out["count"] = entries.size();
  out["entries"] = std::move(entries);
  return out;
}

Json catalog_report_json(const CatalogReport& r) {
  Json out;
  out["dim"] = r.dim ? Json(*r.dim) : Json(nullptr);
  out["passed"] = r.passed();
  out["failed"] = r.failed();
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json ej;
    ej["label"] = e.label;
    ej["dim"] = e.dim;
    ej["pass"] = e.pass();
    ej["expected"] = expected_json(e.expected);
    ej["computed"] = {{"solvable", e.solvable},
                      {"nilpotent", e.nilpotent},
                      {"unimodular", e.unimodular},
                      {"strongly_unimodular", e.strongly_unimodular},
                      {"fpf", std::string(to_string(e.fpf))},
                      {"engine", e.engine},
                      {"witness_order", e.witness_order ? Json(*e.witness_order) : Json(nullptr)}};
    ej["diffs"] = e.diffs;
    entries.push_back(std::move(ej));
  }
  out["entries"] = std::move(entries);
  Json families = Json::array();
  for (const auto& f : r.families) {
    Json fj;
    fj["family"] = f.family;
    unsigned m = 1;
    fj["params"] = params_json(f.params, m);
    fj["params_conductor"] = m;
    fj["host"] = f.host;
    fj["pass"] = f.pass();
    fj["is_morphism"] = f.is_morphism;
    fj["is_fpf"] = f.is_fpf;
    fj["expect_fpf"] = f.expect_fpf;
    fj["order"] = f.order ? Json(*f.order) : Json(nullptr);
    fj["claimed_order"] = f.claimed_order ? Json(*f.claimed_order) : Json(nullptr);
    fj["diffs"] = f.diffs;
    families.push_back(std::move(fj));
  }
  out["families"] = std::move(families);
  return out;
}

namespace {

void plain_into(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) plain_into(v, path.empty() ? k : path + "." + k, out);
    return;
  }
  if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) plain_into(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

std::string to_plain(const Json& j) {
  std::string out;
  plain_into(j, "", out);
  return out;
}

}  // namespace liefix::cli
