#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace liefix;
using oracle::make_algebra;

namespace {

CycScalar S(long v) { return CycScalar(v); }

LieAlgebra n3() { return make_algebra(3, {{1, 2, {{3, S(1)}}}}); }
LieAlgebra r2() { return make_algebra(2, {{1, 2, {{2, S(1)}}}}); }
LieAlgebra r3lam(const CycScalar& l) {
  return make_algebra(3, {{1, 2, {{2, S(1)}}}, {1, 3, {{3, l}}}});
}
LieAlgebra sl2() {
  return make_algebra(3, {{1, 2, {{3, S(1)}}}, {1, 3, {{1, S(-2)}}}, {2, 3, {{2, S(2)}}}});
}
LieAlgebra ex210(const CycScalar& a) {
  return make_algebra(5, {{1, 5, {{1, S(2) * a}}},
                          {2, 5, {{2, a}, {3, S(1)}}},
                          {4, 5, {{4, S(-4) * a}}},
                          {2, 3, {{1, S(1)}}},
                          {3, 5, {{2, S(-1)}, {3, a}}}});
}

std::vector<std::size_t> dims(const SubspaceChain& c) {
  std::vector<std::size_t> out;
  for (const auto& s : c.links) out.push_back(s.dim());
  return out;
}

// Random solvable algebras: a random nilpotent algebra extended by one of its
// derivations, plus almost abelian ones.
std::vector<LieAlgebra> solvable_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<LieAlgebra> out;
  while (static_cast<int>(out.size()) < count) {
    if (rng() % 2) {
      out.push_back(oracle::almost_abelian(oracle::random_matrix(rng, 1 + rng() % 4, 1, 2)));
      continue;
    }
    auto h = oracle::random_nilpotent(rng, 5);
    if (!h) continue;
    SolutionSpace der = derivation_algebra(*h);
    FieldMatrix d(h->dim(), h->dim());
    for (const auto& b : der.basis) d = d + CycScalar(static_cast<long>(rng() % 5) - 2) * b;
    out.push_back(oracle::semidirect(*h, d));
  }
  return out;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(n3().dim() == 3);
  CHECK(LieAlgebra::abelian(4).is_abelian());
  try {
    make_algebra(3, {{1, 2, {{1, S(1)}}}, {1, 3, {{2, S(1)}}}});
    FAIL("expected JacobiViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::JacobiViolation);
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }
}

TEST_CASE("adjoint examples") {
  FieldMatrix ad1 = adjoint(n3(), unit_vec(3, 0));
  FieldMatrix expected(3, 3);
  expected.at(2, 1) = S(1);
  CHECK(ad1 == expected);
  CHECK(adjoint(n3(), unit_vec(3, 2)).is_zero());
  CycScalar a = S(3);
  FieldMatrix ad5 = adjoint(ex210(a), unit_vec(5, 4));
  FieldMatrix e(5, 5);
  e.at(0, 0) = S(-2) * a;
  e.at(1, 1) = -a;
  e.at(2, 1) = S(-1);
  e.at(1, 2) = S(1);
  e.at(2, 2) = -a;
  e.at(3, 3) = S(4) * a;
  CHECK(ad5 == e);
}

TEST_CASE("subspace_bracket and series examples") {
  auto g = n3();
  Subspace whole = Subspace::whole(3);
  CHECK(subspace_bracket(g, whole, whole) == Subspace::span(3, {unit_vec(3, 2)}));
  Subspace nn = Subspace::span(5, {unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2), unit_vec(5, 3)});
  CHECK(subspace_bracket(ex210(S(1)), nn, nn) == Subspace::span(5, {unit_vec(5, 0)}));
  CHECK(subspace_bracket(g, whole, Subspace(3)).is_zero());
  CHECK(dims(series(g, SeriesKind::LowerCentral)) == std::vector<std::size_t>{3, 1, 0});
  auto up = series(g, SeriesKind::UpperCentral);
  CHECK(dims(up) == std::vector<std::size_t>{0, 1, 3});
  CHECK(up.links[1] == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(dims(series(sl2(), SeriesKind::Derived)) == std::vector<std::size_t>{3});
  CHECK_FALSE(is_solvable(sl2()));
  CHECK(is_nilpotent(n3()));
  CHECK_FALSE(is_nilpotent(r2()));
}

TEST_CASE("quotient by the center") {
  auto g = make_algebra(4, {{1, 2, {{3, S(1)}}}, {1, 3, {{4, S(1)}}}});
  Quotient q = quotient(g, center(g));
  CHECK(q.algebra.dim() == 3);
  CHECK(dims(series(q.algebra, SeriesKind::LowerCentral)) == std::vector<std::size_t>{3, 1, 0});
  CHECK_THROWS_AS(quotient(g, Subspace::span(4, {unit_vec(4, 1)})), Error);
}

TEST_CASE("nilradical examples") {
  CHECK(nilradical(n3()) == Subspace::whole(3));
  CHECK(nilradical(r3lam(S(2))) == Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)}));
  CHECK(nilradical(r3lam(CycScalar::zeta(3))) == Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)}));
  Subspace nn = Subspace::span(5, {unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2), unit_vec(5, 3)});
  CHECK(nilradical(ex210(S(1))) == nn);
  CHECK(nilradical(ex210(CycScalar::zeta(3))) == nn);
  CHECK_THROWS_AS(nilradical(sl2()), Error);
}

TEST_CASE("nilradical invariants on random solvable algebras") {
  for (const auto& g : solvable_corpus(21, 40)) {
    Subspace n = nilradical(g);
    Subspace whole = Subspace::whole(g.dim());
    CHECK(n.contains(subspace_bracket(g, whole, n)));
    CHECK(n.contains(subspace_bracket(g, whole, whole)));
    // Every element of N acts nilpotently; sample a few.
    std::mt19937_64 rng(g.dim());
    for (int t = 0; t < 3 && n.dim() > 0; ++t) {
      Vec x(g.dim());
      for (std::size_t i = 0; i < n.dim(); ++i)
        x = add(x, scale(CycScalar(static_cast<long>(rng() % 5) - 2), n.basis().row(i)));
      CHECK(power(adjoint(g, x), g.dim()).is_zero());
    }
    for (std::size_t j : n.complement_indices())
      CHECK_FALSE(power(adjoint(g, unit_vec(g.dim(), j)), g.dim()).is_zero());
  }
}

TEST_CASE("unimodularity examples") {
  for (long l : {-2L, -1L, 1L, 2L}) {
    auto r = unimodularity_report(r3lam(S(l)));
    CHECK(r.unimodular == (l == -1));
    CHECK(r.strongly_unimodular == (l == -1));
  }
  for (CycScalar a : {S(1), S(2), CycScalar::zeta(3)}) {
    auto r = unimodularity_report(ex210(a));
    CHECK(r.unimodular);
    CHECK_FALSE(r.strongly_unimodular);
    bool found = false;
    for (const auto& e : r.table)
      if (e.basis_index == 4 && e.level == 1 && !e.trace.is_zero()) found = true;
    CHECK(found);
  }
  auto rn = unimodularity_report(n3());
  CHECK(rn.unimodular);
  CHECK(rn.strongly_unimodular);
  auto rs = unimodularity_report(sl2());
  CHECK(rs.unimodular);
  CHECK_FALSE(rs.solvable);
  CHECK_FALSE(rs.strongly_unimodular);
}

TEST_CASE("strongly unimodular implies unimodular") {
  for (const auto& g : solvable_corpus(5, 40)) {
    auto r = unimodularity_report(g);
    if (r.strongly_unimodular) CHECK(r.unimodular);
  }
}

TEST_CASE("derivation algebra examples and dense oracle") {
  CHECK(derivation_algebra(LieAlgebra::abelian(2)).dimension() == 4);
  CHECK(derivation_algebra(n3()).dimension() == 6);
  CHECK(derivation_algebra(r2()).dimension() == 2);
  CHECK(derivation_algebra(sl2()).dimension() == 3);
  for (const auto& g : solvable_corpus(8, 20)) {
    SolutionSpace d = derivation_algebra(g);
    CHECK(d.dimension() == oracle::derivation_dim(g));
    for (const auto& m : d.basis) CHECK(is_derivation(g, m));
  }
}

TEST_CASE("is_cnla examples") {
  auto a = is_cnla(LieAlgebra::abelian(3));
  CHECK_FALSE(a.cnla);
  REQUIRE(a.non_nilpotent);
  auto n = is_cnla(n3());
  CHECK_FALSE(n.cnla);
  CHECK(is_derivation(n3(), FieldMatrix::diagonal({1, 1, 2})));
  REQUIRE(n.non_nilpotent);
  CHECK_FALSE(char_poly(*n.non_nilpotent) == CycPolynomial::monomial(S(1), 3));
  CHECK_FALSE(is_cnla(r2()).cnla);
}

TEST_CASE("is_cnla agrees with the symbolic oracle") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 30) {
    auto g = oracle::random_nilpotent(rng, 6);
    if (!g) continue;
    ++checked;
    auto r = is_cnla(*g);
    CHECK(r.cnla == oracle::generic_derivation_nilpotent(r.derivations.basis));
  }
}

TEST_CASE("check_automorphism examples") {
  auto id = check_automorphism(n3(), FieldMatrix::identity(3));
  CHECK(id.is_morphism);
  CHECK_FALSE(id.is_fpf);
  for (unsigned n = 3; n <= 8; ++n) {
    CycScalar z = CycScalar::zeta(n);
    auto r = check_automorphism(n3(), FieldMatrix::diagonal({z, z, z * z}));
    CHECK(r.is_morphism);
    CHECK(r.is_fpf);
    CHECK(r.order.status == OrderStatus::Finite);
    CHECK(r.order.order == n);
  }
  FieldMatrix swap(2, 2);
  swap.at(0, 1) = S(1);
  swap.at(1, 0) = S(1);
  CHECK_FALSE(check_automorphism(r2(), swap).is_morphism);
}

TEST_CASE("minus identity is an automorphism only of abelian algebras") {
  for (const auto& g : solvable_corpus(3, 20)) {
    auto r = check_automorphism(g, -FieldMatrix::identity(g.dim()));
    CHECK(r.is_fpf);
    CHECK(r.order.order == 2);
    CHECK(r.is_morphism == g.is_abelian());
  }
}

TEST_CASE("sl2 automorphisms always fix a vector") {
  // Ad(h) in the basis E, F, H of the bracket table above.
  std::mt19937_64 rng(13);
  auto g = sl2();
  FieldMatrix e = FieldMatrix::from_rows({{0, 1}, {0, 0}});
  FieldMatrix f = FieldMatrix::from_rows({{0, 0}, {1, 0}});
  FieldMatrix hh = FieldMatrix::from_rows({{1, 0}, {0, -1}});
  auto coords = [](const FieldMatrix& x) { return Vec{x.at(0, 1), x.at(1, 0), x.at(0, 0)}; };
  int morphisms = 0;
  for (int t = 0; t < 30; ++t) {
    FieldMatrix h(2, 2);
    if (t < 10) {  // upper triangular family
      CycScalar a = oracle::small_scalar(rng, 3, 2);
      if (a.is_zero()) a = S(1);
      h.at(0, 0) = a;
      h.at(1, 1) = a.inverse();
      h.at(0, 1) = oracle::small_scalar(rng, 3, 2);
    } else {
      h = oracle::random_invertible(rng, 2, 4);
    }
    FieldMatrix hi = inverse(h);
    FieldMatrix phi = FieldMatrix::from_columns(
        {coords(h * e * hi), coords(h * f * hi), coords(h * hh * hi)});
    auto r = check_automorphism(g, phi);
    CHECK(r.is_morphism);
    CHECK_FALSE(r.is_fpf);
    ++morphisms;
    auto s = check_automorphism(g, oracle::random_matrix(rng, 3, 3, 2));
    CHECK_FALSE((s.is_morphism && s.is_fpf));
  }
  CHECK(morphisms == 30);
}
