#include <algorithm>

#include "liefix/catalog.hpp"

namespace liefix {

namespace {

struct Term {
  std::size_t i, j;  // 1-based
  std::vector<std::pair<std::size_t, CycScalar>> value;
};

LieAlgebra build(std::size_t n, const std::vector<Term>& terms, const std::string& name) {
  LieAlgebra::BracketTable t;
  for (const auto& term : terms) {
    Vec v(n);
    for (const auto& [k, c] : term.value) v[k - 1] += c;
    if (!is_zero(v)) t[{term.i - 1, term.j - 1}] = std::move(v);
  }
  return LieAlgebra::validate(n, t, name);
}

long integer_param(const CycScalar& c, const std::string& what) {
  if (!c.is_integral() || !c.is_rational())
    throw Error(ErrorKind::BadParameters, what + " must be an integer");
  const Rational& q = c.rational_part();
  if (!q.get_num().fits_slong_p()) throw Error(ErrorKind::BadParameters, what + " is too large");
  return q.get_num().get_si();
}

const std::vector<std::pair<std::string, std::size_t>>& arities() {
  static const std::vector<std::pair<std::string, std::size_t>> table = {
      {"C^n", 1}, {"r2", 0},  {"n3", 0},  {"r2+C", 0}, {"r3", 0},  {"r3lam", 1}, {"sl2", 0},
      {"g1", 0},  {"g2", 0},  {"g3", 0},  {"g4", 0},   {"g5", 0},  {"g6", 0},    {"g7", 1},
      {"g8", 0},  {"g9", 2},  {"g10", 1}, {"ex210", 1}, {"Ln", 1}, {"Qn", 1}};
  return table;
}

std::string canonical(const std::string& name) { return name == "Cn" ? "C^n" : name; }

const CycScalar kOmega = CycScalar::zeta(3);

bool in_alias_pair(const CycScalar& a, const CycScalar& b) {
  return (a == CycScalar(-1) && b.is_zero()) || (a.is_zero() && b == CycScalar(-1));
}

}  // namespace

std::string CatalogEntry::label() const {
  if (params.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + params[i].value.str();
  return out + ")";
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, arity] : arities()) out.push_back(name);
  return out;
}

std::size_t catalog_arity(const std::string& name) {
  for (const auto& [n, arity] : arities())
    if (n == canonical(name)) return arity;
  throw Error(ErrorKind::UnknownName, "no catalog algebra named '" + name + "'");
}

CatalogEntry get_algebra(const std::string& raw, const std::vector<CycScalar>& params) {
  const std::string name = canonical(raw);
  const std::size_t arity = catalog_arity(name);
  if (params.size() != arity)
    throw Error(ErrorKind::BadParameters, name + " takes " + std::to_string(arity) + " parameter(s), got " +
                                              std::to_string(params.size()));
  const CycScalar one(1);
  CatalogEntry e;
  e.name = name;
  Expected& x = e.expected;
  // Defaults: solvable, not nilpotent, nothing else.
  x.solvable = true;
  auto nilpotent_all = [&x]() {
    x.nilpotent = x.unimodular = x.strongly_unimodular = x.fpf_exists = true;
  };
  std::string label;
  if (name == "C^n") {
    long n = integer_param(params[0], "n");
    if (n < 1) throw Error(ErrorKind::BadParameters, "C^n needs n >= 1");
    e.params = {{"n", params[0]}};
    e.algebra = LieAlgebra::abelian(static_cast<std::size_t>(n));
    nilpotent_all();
    e.families = {"abelian"};
  } else if (name == "r2") {
    e.algebra = build(2, {{1, 2, {{2, one}}}}, name);
  } else if (name == "n3") {
    e.algebra = build(3, {{1, 2, {{3, one}}}}, name);
    nilpotent_all();
    e.families = {"n3"};
  } else if (name == "r2+C") {
    e.algebra = build(3, {{1, 2, {{2, one}}}}, name);
  } else if (name == "r3") {
    e.algebra = build(3, {{1, 2, {{2, one}}}, {1, 3, {{2, one}, {3, one}}}}, name);
  } else if (name == "r3lam") {
    const CycScalar& l = params[0];
    if (l.is_zero()) throw Error(ErrorKind::BadParameters, "r3lam needs lambda != 0");
    e.params = {{"lambda", l}};
    e.algebra = build(3, {{1, 2, {{2, one}}}, {1, 3, {{3, l}}}}, name);
    bool su = l == CycScalar(-1);
    x.unimodular = x.strongly_unimodular = x.fpf_exists = su;
    x.strongly_unimodular_rule = x.fpf_rule = "lambda = -1";
    if (su) e.families = {"r3m1"};
  } else if (name == "sl2") {
    e.algebra = build(3, {{1, 2, {{3, one}}}, {1, 3, {{1, CycScalar(-2)}}}, {2, 3, {{2, CycScalar(2)}}}}, name);
    x.solvable = false;
    x.unimodular = true;
  } else if (name == "g1") {
    e.algebra = build(4, {{1, 2, {{3, one}}}}, name);
    nilpotent_all();
  } else if (name == "g2") {
    e.algebra = build(4, {{1, 2, {{3, one}}}, {1, 3, {{4, one}}}}, name);
    nilpotent_all();
    e.families = {"n4"};
  } else if (name == "g3") {
    e.algebra = build(4, {{1, 2, {{2, one}}}}, name);
  } else if (name == "g4") {
    e.algebra = build(4, {{1, 2, {{2, one}}}, {3, 4, {{4, one}}}}, name);
  } else if (name == "g5") {
    e.algebra = build(4, {{1, 2, {{2, one}}}, {1, 3, {{3, CycScalar(-1)}}}, {2, 3, {{1, one}}}}, name);
    x.solvable = false;
    x.unimodular = true;
  } else if (name == "g6") {
    e.algebra = build(4, {{1, 2, {{2, one}}}, {1, 3, {{3, one}}}, {1, 4, {{4, one}}}}, name);
  } else if (name == "g7") {
    const CycScalar& a = params[0];
    e.params = {{"alpha", a}};
    e.algebra = build(4, {{1, 2, {{2, one}}}, {1, 3, {{3, one}}}, {1, 4, {{3, one}, {4, a}}}}, name);
    x.unimodular = x.strongly_unimodular = a == CycScalar(-2);
    x.strongly_unimodular_rule = "alpha = -2";
    x.fpf_rule = "never";
  } else if (name == "g8") {
    e.algebra = build(4, {{1, 2, {{2, one}}}, {1, 3, {{3, one}}}, {1, 4, {{4, CycScalar(2)}}}, {2, 3, {{4, one}}}},
                      name);
  } else if (name == "g9") {
    const CycScalar &a = params[0], &b = params[1];
    e.params = {{"alpha", a}, {"beta", b}};
    e.algebra = build(4, {{1, 2, {{2, one}}}, {1, 3, {{2, one}, {3, a}}}, {1, 4, {{3, one}, {4, b}}}}, name);
    bool su = a + b == CycScalar(-1);
    x.unimodular = x.strongly_unimodular = su;
    x.strongly_unimodular_rule = "alpha + beta = -1";
    bool cube = (a * a + a + one).is_zero();
    x.fpf_exists = su && (cube || in_alias_pair(a, b));
    x.fpf_rule = "alpha + beta = -1 and (alpha^2 + alpha + 1 = 0 or {alpha, beta} = {-1, 0})";
    if (su && cube) e.families = {"g9w"};
  } else if (name == "g10") {
    const CycScalar& a = params[0];
    e.params = {{"alpha", a}};
    e.algebra = build(4,
                      {{1, 2, {{2, one}}},
                       {1, 3, {{2, one}, {3, a}}},
                       {1, 4, {{4, a + one}}},
                       {2, 3, {{4, one}}}},
                      name);
    bool su = a == CycScalar(-1);
    x.unimodular = x.strongly_unimodular = x.fpf_exists = su;
    x.strongly_unimodular_rule = x.fpf_rule = "alpha = -1";
    if (su) e.families = {"g10m1"};
  } else if (name == "ex210") {
    const CycScalar& a = params[0];
    if (a.is_zero()) throw Error(ErrorKind::BadParameters, "ex210 needs alpha != 0");
    e.params = {{"alpha", a}};
    e.algebra = build(5,
                      {{1, 5, {{1, CycScalar(2) * a}}},
                       {2, 5, {{2, a}, {3, one}}},
                       {4, 5, {{4, CycScalar(-4) * a}}},
                       {2, 3, {{1, one}}},
                       {3, 5, {{2, CycScalar(-1)}, {3, a}}}},
                      name);
    x.unimodular = true;
  } else if (name == "Ln" || name == "Qn") {
    long n = integer_param(params[0], "n");
    bool q = name == "Qn";
    if (n < 3 || (q && (n < 4 || n % 2 != 0)))
      throw Error(ErrorKind::BadParameters, q ? "Qn needs an even n >= 4" : "Ln needs n >= 3");
    e.params = {{"n", params[0]}};
    const auto size = static_cast<std::size_t>(n);
    std::vector<Term> terms;
    for (std::size_t i = 2; i < size; ++i) terms.push_back({1, i, {{i + 1, one}}});
    if (q)
      for (std::size_t i = 2; i <= size / 2; ++i)
        terms.push_back({i, size + 1 - i, {{size, CycScalar(i % 2 == 0 ? 1 : -1)}}});
    e.algebra = build(size, terms, name);
    nilpotent_all();
  }
  e.algebra.set_name(e.label());
  return e;
}

LieAlgebra direct_sum_abelian(const LieAlgebra& g, std::size_t k, std::string name) {
  const std::size_t n = g.dim();
  LieAlgebra::BracketTable t;
  for (const auto& [key, v] : g.brackets()) {
    Vec w = v;
    w.resize(n + k);
    t[key] = std::move(w);
  }
  return LieAlgebra::validate(n + k, t, std::move(name), g.conductor());
}

std::optional<CatalogEntry> catalog_alias(const CatalogEntry& e) {
  if (e.name != "g9" || !(e.params[0].value == CycScalar(-1) && e.params[1].value.is_zero())) return std::nullopt;
  CatalogEntry base = get_algebra("r3lam", {CycScalar(-1)});
  CatalogEntry out = base;
  out.name = "r3lam(-1)+C";
  out.params.clear();
  out.algebra = direct_sum_abelian(base.algebra, 1, out.name);
  out.families.clear();
  return out;
}

std::vector<CatalogEntry> catalog_samples(std::optional<std::size_t> dim) {
  std::vector<CatalogEntry> out;
  auto push = [&](const std::string& name, std::vector<CycScalar> params = {}) {
    CatalogEntry e = get_algebra(name, params);
    if (!dim || e.algebra.dim() == *dim) out.push_back(std::move(e));
  };
  const CycScalar w = kOmega, w2 = kOmega * kOmega;
  std::vector<CycScalar> grid;
  for (long v = -3; v <= 3; ++v) grid.emplace_back(v);
  grid.push_back(w);
  grid.push_back(w2);

  for (long n = 1; n <= 4; ++n) push("C^n", {CycScalar(n)});
  for (const char* name : {"r2", "n3", "r2+C", "r3", "sl2"}) push(name);
  for (const CycScalar& l : {CycScalar(-2), CycScalar(-1), CycScalar(1), CycScalar(2), CycScalar(Rational(1, 2)), w})
    push("r3lam", {l});
  for (const char* name : {"g1", "g2", "g3", "g4", "g5", "g6", "g8"}) push(name);
  for (const auto& a : grid) push("g7", {a});
  for (const auto& a : grid)
    for (const auto& b : grid) push("g9", {a, b});
  for (const auto& a : grid) push("g10", {a});
  for (const CycScalar& a : {CycScalar(1), CycScalar(2), w, CycScalar(-1)}) push("ex210", {a});
  for (long n = 3; n <= 10; ++n) push("Ln", {CycScalar(n)});
  for (long n = 4; n <= 10; n += 2) push("Qn", {CycScalar(n)});
  return out;
}

}  // namespace liefix
