// One line per acceptance criterion. Exit status is 0 only when every
// criterion passes, or when exactly the criteria named by --known-failures
// fail and all others pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "liefix/catalog.hpp"
#include "oracles.hpp"

using namespace liefix;

namespace {

CycScalar S(long v) { return CycScalar(v); }
const CycScalar W = CycScalar::zeta(3);
const CycScalar W2 = W * W;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 6) problems.push_back(what);
    }
  }
};

std::vector<CycScalar> grid() {
  std::vector<CycScalar> g;
  for (long v = -3; v <= 3; ++v) g.emplace_back(v);
  g.push_back(W);
  g.push_back(W2);
  return g;
}

bool strongly_unimodular(const LieAlgebra& g) { return unimodularity_report(g).strongly_unimodular; }

// Independent re-check of a witness: brackets by the table, determinant of
// phi - I by permutation expansion when small enough.
bool reverifies(const LieAlgebra& g, const FieldMatrix& phi) {
  if (!oracle::preserves_brackets_by_table(g, phi)) return false;
  FieldMatrix shifted = phi - FieldMatrix::identity(phi.rows());
  CycScalar d = phi.rows() <= 7 ? oracle::permutation_det(shifted) : det(shifted);
  return !d.is_zero();
}

FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows() + b.rows(), a.rows() + b.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.rows(); ++c) out.at(a.rows() + r, a.rows() + c) = b.at(r, c);
  return out;
}

FieldMatrix nilpotent_jordan(std::size_t size) {
  FieldMatrix j(size, size);
  for (std::size_t i = 0; i + 1 < size; ++i) j.at(i, i + 1) = S(1);
  return j;
}

// Actions on K^k with k <= 5: a zeta block, maybe a spoiler eigenvalue, maybe
// a nilpotent part, or a plain random matrix.
FieldMatrix random_action(std::mt19937_64& rng, bool force_nilpotent) {
  FieldMatrix a;
  switch (rng() % 4) {
    case 0:
      a = oracle::random_matrix(rng, 2 + rng() % 3, 1, 2);
      break;
    default: {
      unsigned n = 2 + rng() % 2;
      a = oracle::zeta_block(oracle::random_invertible(rng, 1, 1), n);
      if (rng() % 3 == 0) a = direct_sum(a, FieldMatrix::diagonal({S(1 + static_cast<long>(rng() % 3))}));
    }
  }
  if (force_nilpotent || rng() % 3 == 0) a = direct_sum(a, nilpotent_jordan(1 + rng() % 2));
  while (a.rows() > 5) a = a.block(0, 0, 5, 5);
  FieldMatrix p = oracle::random_invertible(rng, a.rows(), 1);
  return p * a * inverse(p);
}

// 1. Dimension 3 column.
Outcome dim3_column() {
  Outcome o;
  std::vector<std::pair<CatalogEntry, bool>> named = {
      {get_algebra("C^n", {S(3)}), true}, {get_algebra("n3"), true},  {get_algebra("r2+C"), false},
      {get_algebra("r3"), false},         {get_algebra("sl2"), false}, {get_algebra("r3lam", {S(-1)}), true}};
  for (const CycScalar& l : {S(-2), S(1), S(2), CycScalar(Rational(1, 2)), W})
    named.push_back({get_algebra("r3lam", {l}), false});
  for (const auto& [e, flag] : named) o.require(strongly_unimodular(e.algebra) == flag, e.label());
  o.detail = std::to_string(named.size()) + " algebras, true only for C^3, n3, r3lam(-1)";
  return o;
}

// 2. Conditional dimension 4 flags.
Outcome dim4_rules() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& a : grid()) {
    o.require(strongly_unimodular(get_algebra("g7", {a}).algebra) == (a == S(-2)), "g7(" + a.str() + ")");
    o.require(strongly_unimodular(get_algebra("g10", {a}).algebra) == (a == S(-1)), "g10(" + a.str() + ")");
    checked += 2;
    for (const auto& b : grid()) {
      o.require(strongly_unimodular(get_algebra("g9", {a, b}).algebra) == (a + b == S(-1)),
                "g9(" + a.str() + "," + b.str() + ")");
      ++checked;
    }
  }
  o.detail = std::to_string(checked) + " parameter points";
  return o;
}

// 3. Verdicts.
Outcome verdicts() {
  Outcome o;
  std::size_t checked = 0;
  auto expect = [&](const CatalogEntry& e, bool yes) {
    FpfDecision d = route_fpf(e.algebra);
    ++checked;
    o.require(d.verdict == (yes ? Verdict::Yes : Verdict::No), e.label() + " -> " + std::string(to_string(d.verdict)));
    if (yes) o.require(d.witness && d.witness->certified(), e.label() + " witness");
  };
  expect(get_algebra("r2"), false);
  expect(get_algebra("n3"), true);
  for (long l : {-2, -1, 1, 2}) expect(get_algebra("r3lam", {S(l)}), l == -1);
  for (const CycScalar& a : {W, W2, S(2), S(-3), CycScalar(Rational(1, 2))})
    expect(get_algebra("g9", {a, S(-1) - a}), (a * a + a + S(1)).is_zero());
  expect(get_algebra("g7", {S(-2)}), false);
  expect(get_algebra("g10", {S(-1)}), true);
  expect(get_algebra("g2"), true);  // n4
  o.detail = std::to_string(checked) + " verdicts";
  return o;
}

// 4. Automorphism families: automorphism, f.p.f., claimed order.
Outcome family_orders() {
  Outcome o;
  std::size_t checked = 0;
  auto expect = [&](const std::string& fam, const std::vector<CycScalar>& params, unsigned long order) {
    CatalogEntry host = family_host(fam, params);
    FieldMatrix phi = family_automorphism(fam, params);
    std::string tag = fam + "(" + params.back().str() + ")";
    ++checked;
    if (!oracle::preserves_brackets_by_table(host.algebra, phi)) {
      o.require(false, tag + " not an automorphism");
      return;
    }
    bool fpf = !oracle::permutation_det(phi - FieldMatrix::identity(phi.rows())).is_zero();
    unsigned long got = oracle::order_by_powers(phi);
    o.require(fpf, tag + " has eigenvalue 1");
    o.require(got == order, tag + " order " + std::to_string(got) + ", claimed " + std::to_string(order));
  };
  for (unsigned n = 3; n <= 8; ++n) expect("n3", {S(n)}, n);
  for (unsigned n = 4; n <= 8; ++n) expect("n4", {CycScalar::zeta(n), CycScalar::zeta(n)}, n);
  for (unsigned m = 2; m <= 6; ++m) expect("r3m1", {S(m)}, 2 * m);
  for (unsigned m = 2; m <= 5; ++m) expect("g9w", {S(m)}, 3 * m);
  for (unsigned m = 3; m <= 6; ++m) expect("g10m1", {S(m)}, 2 * m);
  // m = 2 exclusion.
  FieldMatrix m2 = family_automorphism("g10m1", {S(2)});
  bool excluded = oracle::preserves_brackets_by_table(get_algebra("g10", {S(-1)}).algebra, m2) &&
                  oracle::permutation_det(m2 - FieldMatrix::identity(4)).is_zero();
  o.require(excluded, "g10m1(2): det(phi - I) != 0");
  o.detail = std::to_string(checked + 1) + " family members";
  return o;
}

// 5. n-cyclotomic equivalence on block constructions and generic matrices.
Outcome cyclotomic_oracle() {
  Outcome o;
  std::mt19937_64 rng(5);
  const unsigned conductors[] = {1, 2, 3, 4, 6, 12};
  for (int t = 0; t < 200; ++t) {
    unsigned n = 2 + rng() % 3;
    std::size_t k = 1 + rng() % 2;
    unsigned c = conductors[rng() % 6];
    FieldMatrix block = oracle::zeta_block(oracle::random_invertible(rng, k, c), n);
    FieldMatrix p = oracle::random_invertible(rng, block.rows(), 1);
    FieldMatrix a = p * block * inverse(p);
    CyclotomicTest r = is_n_cyclotomic(a, n);
    o.require(r.holds && r.certificate.n == n && !r.certificate.factors.empty() &&
                  r.certificate.factors == r.certificate.scaled_factors,
              "block case " + std::to_string(t));
  }
  int generic = 0;
  while (generic < 200) {
    std::size_t size = 2 + rng() % 3;
    FieldMatrix a = oracle::random_matrix(rng, size, generic % 2 ? 3 : 1);
    if (a.trace().is_zero() || det(a).is_zero()) continue;
    ++generic;
    o.require(cyclotomic_report(a).admissible.empty(), "generic case " + std::to_string(generic));
  }
  o.detail = "200 block constructions, 200 generic matrices";
  return o;
}

// 6. Companion/Vandermonde similarity.
Outcome vandermonde() {
  Outcome o;
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    std::size_t size = 1 + rng() % 3;
    unsigned n = 2 + rng() % 3;
    FieldMatrix c = oracle::random_invertible(rng, size, t % 2 ? 3 : 1);
    VandermondeSimilarity v = companion_similarity(c, n);
    o.require(v.scaled_blocks == oracle::zeta_block(c, n), "blocks " + std::to_string(t));
    o.require(v.companion * v.p == v.p * v.scaled_blocks, "identity " + std::to_string(t));
    o.require(!det(v.p).is_zero(), "singular P " + std::to_string(t));
  }
  o.detail = "100 cases";
  return o;
}

struct Corpus {
  std::vector<LieAlgebra> algebras;
  std::vector<FpfDecision> decisions;
};

Corpus build_corpus() {
  Corpus c;
  for (const auto& e : catalog_samples()) c.algebras.push_back(e.algebra);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) c.algebras.push_back(oracle::almost_abelian(random_action(rng, false)));
  for (const auto& g : c.algebras) c.decisions.push_back(route_fpf(g));
  return c;
}

// 7. Successful witness implies strong unimodularity.
Outcome witness_implies_su(const Corpus& c) {
  Outcome o;
  std::size_t witnesses = 0;
  for (std::size_t i = 0; i < c.algebras.size(); ++i) {
    const FpfDecision& d = c.decisions[i];
    if (!d.witness || !d.witness->certified()) continue;
    ++witnesses;
    o.require(strongly_unimodular(c.algebras[i]), c.algebras[i].name() + " #" + std::to_string(i));
  }
  o.require(witnesses > 0, "no witnesses in the corpus");
  o.detail = std::to_string(c.algebras.size()) + " algebras, " + std::to_string(witnesses) + " witnesses";
  return o;
}

// 8. Order 2 only on abelian algebras.
Outcome order_two_abelian(const Corpus& c) {
  Outcome o;
  std::size_t order_two = 0;
  for (std::size_t i = 0; i < c.algebras.size(); ++i) {
    const FpfDecision& d = c.decisions[i];
    if (!d.witness || !d.witness->certified() || d.witness->order.status != OrderStatus::Finite ||
        d.witness->order.order != 2)
      continue;
    ++order_two;
    o.require(c.algebras[i].is_abelian(), c.algebras[i].name() + " #" + std::to_string(i));
  }
  o.detail = std::to_string(order_two) + " order-2 witnesses";
  return o;
}

// 9. Passing to g / Z_infinity.
Outcome center_reduction() {
  Outcome o;
  std::mt19937_64 rng(9);
  int done = 0, reverified = 0;
  while (done < 50) {
    FieldMatrix action;
    if (done % 3 == 0) {
      // Nilpotent action: g itself is nilpotent.
      FieldMatrix j = direct_sum(nilpotent_jordan(1 + rng() % 3), nilpotent_jordan(1 + rng() % 2));
      FieldMatrix p = oracle::random_invertible(rng, j.rows(), 1);
      action = p * j * inverse(p);
    } else {
      action = random_action(rng, true);
    }
    LieAlgebra g = oracle::almost_abelian(action);
    if (g.is_abelian() || center(g).is_zero()) continue;
    ++done;
    FpfDecision d = decide_fpf(g);
    Subspace zinf = series(g, SeriesKind::UpperCentral).links.back();
    Quotient q = quotient(g, zinf);
    Verdict pipeline = q.algebra.is_abelian() ? Verdict::Yes : decide_fpf(q.algebra).verdict;
    o.require(d.verdict == pipeline, "case " + std::to_string(done));
    if (d.verdict == Verdict::Yes && is_nilpotent(g)) {
      o.require(d.witness && reverifies(g, d.witness->map), "nilpotent witness " + std::to_string(done));
      ++reverified;
    }
  }
  o.detail = "50 algebras with nonzero center, " + std::to_string(reverified) + " nilpotent witnesses re-verified";
  return o;
}

// 10. Filiform statements.
Outcome filiform() {
  Outcome o;
  std::vector<CatalogEntry> models;
  for (long n = 3; n <= 10; ++n) models.push_back(get_algebra("Ln", {S(n)}));
  for (long n = 4; n <= 10; n += 2) models.push_back(get_algebra("Qn", {S(n)}));
  for (const auto& e : models) {
    const LieAlgebra& g = e.algebra;
    o.require(!is_cnla(g).cnla, e.label() + " cnla");
    FieldMatrix d = nonsingular_derivation(g);
    o.require(is_derivation(g, d) && !det(d).is_zero(), e.label() + " derivation");
    FpfDecision dec = decide_fpf_filiform(g);
    o.require(dec.verdict == Verdict::Yes && dec.filiform && dec.filiform->certificate_kind == "exact" &&
                  dec.witness && dec.witness->certified() && reverifies(g, dec.witness->map),
              e.label() + " exact witness");
  }
  LieAlgebra c7 = oracle::cnla7();
  bool oracle_cnla = oracle::generic_derivation_nilpotent(oracle::derivation_basis(c7));
  o.require(oracle_cnla, "cnla7 not certified by the oracle");
  o.require(decide_fpf_filiform(c7).verdict == Verdict::No, "cnla7 verdict");

  std::mt19937_64 rng(10);
  int random = 0, agree = 0;
  while (random < 50) {
    auto g = oracle::random_nilpotent(rng, 6);
    if (!g) continue;
    ++random;
    bool expected = oracle::generic_derivation_nilpotent(oracle::derivation_basis(*g));
    bool ok = is_cnla(*g).cnla == expected;
    agree += ok;
    o.require(ok, "random nilpotent " + std::to_string(random));
  }
  o.detail = std::to_string(models.size()) + " models, cnla7 -> No, " + std::to_string(agree) + "/50 random agree";
  return o;
}

// 11. The unimodular but not strongly unimodular example.
Outcome example_210() {
  Outcome o;
  for (const CycScalar& a : {S(1), S(2), W}) {
    CatalogEntry e = get_algebra("ex210", {a});
    UnimodularityReport u = unimodularity_report(e.algebra);
    o.require(u.unimodular, e.label() + " unimodular");
    o.require(!u.strongly_unimodular, e.label() + " strongly unimodular");
    bool found = false;
    for (const auto& t : u.table)
      if (t.basis_index == 4 && t.level == 1 && !t.trace.is_zero()) found = true;
    o.require(found, e.label() + " trace table");
  }
  o.detail = "alpha in {1, 2, w}";
  return o;
}

// 12. Engines agree.
Outcome cross_engine() {
  Outcome o;
  LieAlgebra n3 = get_algebra("n3").algebra;
  Verdict aa = decide_fpf(n3).verdict, fil = decide_fpf_filiform(n3).verdict;
  o.require(aa == fil && aa == Verdict::Yes, "n3 engines differ");
  CatalogEntry g9 = get_algebra("g9", {S(-1), S(0)});
  auto alias = catalog_alias(g9);
  o.require(alias.has_value(), "no alias for g9(-1,0)");
  if (alias) o.require(route_fpf(g9.algebra).verdict == route_fpf(alias->algebra).verdict, "g9(-1,0) vs alias");
  o.detail = "n3: " + std::string(to_string(aa)) + "/" + std::string(to_string(fil));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> known;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--known-failures", known, "Criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  const std::set<int> known_set(known.begin(), known.end());

  Corpus corpus;
  bool corpus_built = false;
  auto corpus_ref = [&]() -> const Corpus& {
    if (!corpus_built) corpus = build_corpus();
    corpus_built = true;
    return corpus;
  };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dim-3 strong unimodularity column", dim3_column},
      {"dim-4 conditional strong unimodularity", dim4_rules},
      {"f.p.f. verdicts", verdicts},
      {"automorphism families and claimed orders", family_orders},
      {"n-cyclotomic oracle equivalence", cyclotomic_oracle},
      {"companion/Vandermonde similarity", vandermonde},
      {"witness implies strongly unimodular", [&] { return witness_implies_su(corpus_ref()); }},
      {"order 2 only on abelian algebras", [&] { return order_two_abelian(corpus_ref()); }},
      {"reduction modulo the upper central series", center_reduction},
      {"filiform equivalences", filiform},
      {"unimodular, not strongly unimodular example", example_210},
      {"cross-engine consistency", cross_engine},
  };

  int failed = 0;
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << " (" << o.detail;
    line.precision(2);
    line << std::fixed << "; " << secs << "s)";
    for (const auto& p : o.problems) line << "\n        " << p;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
    if (o.pass == (known_set.count(id) > 0)) unexpected = true;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed";
  if (!known_set.empty()) {
    std::cout << " (expected to fail:";
    for (int k : known_set) std::cout << " " << k;
    std::cout << ")";
  }
  std::cout << std::endl;
  if (known_set.empty()) return failed == 0 ? 0 : 1;
  return unexpected ? 1 : 0;
}
