#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liefix/decompose.hpp"
#include "oracles.hpp"

using namespace liefix;

namespace {

FieldMatrix m(std::initializer_list<std::initializer_list<CycScalar>> rows) {
  std::vector<Vec> v;
  for (auto& r : rows) v.emplace_back(r);
  return FieldMatrix::from_rows(v);
}

const CycPolynomial T = CycPolynomial::monomial(CycScalar(1), 1);
CycPolynomial C(const CycScalar& c) { return CycPolynomial::constant(c); }

CycPolynomial product(const std::vector<CycPolynomial>& ps) {
  CycPolynomial p = C(CycScalar(1));
  for (const auto& q : ps) p = p * q;
  return p;
}

}  // namespace

TEST_CASE("linear solve suite examples") {
  CHECK(det(m({{1, 1}, {0, 1}})) == CycScalar(1));
  CycScalar w = CycScalar::zeta(3);
  FieldMatrix a = m({{1, w}, {w * w, 1}});
  FieldMatrix k = kernel(a);
  REQUIRE(k.rows() == 1);
  Vec expected{w, CycScalar(-1)};
  CycScalar ratio = k.at(0, 0) / expected[0];
  CHECK(k.at(0, 1) == ratio * expected[1]);
  CHECK(is_zero(a.apply(expected)));
  CHECK(rank(FieldMatrix(3, 3)) == 0);
  CHECK_THROWS_AS(inverse(m({{1, 2}, {2, 4}})), Error);
  FieldMatrix b = m({{2, 1}, {1, w}});
  CHECK(b * inverse(b) == FieldMatrix::identity(2));
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(m({{0, 1}, {0, 0}})) == T * T);
  CycScalar w = CycScalar::zeta(3);
  CHECK(char_poly(FieldMatrix::diagonal({1, w, w * w})) == T * T * T - C(1));
  for (CycScalar alpha : {CycScalar(2), w, CycScalar(Rational(1, 3))}) {
    FieldMatrix a = m({{1, 1, 0}, {0, alpha, 1}, {0, 0, CycScalar(-1) - alpha}});
    CycPolynomial expected = T * T * T - (alpha * alpha + alpha + CycScalar(1)) * T +
                             C(alpha * (alpha + CycScalar(1)));
    CHECK(char_poly(a) == expected);
  }
}

TEST_CASE("char_poly agrees with determinant expansion at sample points") {
  std::mt19937_64 rng(11);
  for (unsigned cond : {1u, 3u, 4u, 5u}) {
    for (int t = 0; t < 6; ++t) {
      std::size_t n = 1 + rng() % 5;
      FieldMatrix a = oracle::random_matrix(rng, n, cond);
      CycPolynomial chi = char_poly(a);
      CHECK(chi.degree() == static_cast<long>(n));
      for (long s : {-2L, 0L, 3L}) {
        FieldMatrix shifted = CycScalar(s) * FieldMatrix::identity(n) - a;
        CHECK(chi.eval(CycScalar(s)) == oracle::permutation_det(shifted));
      }
      CHECK(chi == product(invariant_factors(a)));
    }
  }
}

TEST_CASE("are_similar examples") {
  auto r = are_similar(FieldMatrix::identity(2), m({{1, 1}, {0, 1}}));
  CHECK_FALSE(r.similar);
  CHECK(r.factors_a == std::vector<CycPolynomial>{T - C(1), T - C(1)});
  CHECK(r.factors_b == std::vector<CycPolynomial>{(T - C(1)) * (T - C(1))});
  CHECK(are_similar(FieldMatrix::diagonal({1, -1}), FieldMatrix::diagonal({-1, 1})).similar);
}

TEST_CASE("similarity agrees with the dimension criterion") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    unsigned cond = std::vector<unsigned>{1, 3, 4}[t % 3];
    std::size_t n = 2 + rng() % 3;
    FieldMatrix a = oracle::random_matrix(rng, n, cond, 1);
    // Sparse perturbations of a conjugate give both outcomes.
    FieldMatrix p = oracle::random_invertible(rng, n, cond);
    FieldMatrix b = p * a * inverse(p);
    CHECK(are_similar(a, b).similar);
    CHECK(oracle::similar_by_dimensions(a, b));
    FieldMatrix c = b;
    c.at(rng() % n, rng() % n) += CycScalar(1);
    CHECK(are_similar(a, c).similar == oracle::similar_by_dimensions(a, c));
  }
  // Same characteristic polynomial, different Jordan structure.
  FieldMatrix j1 = m({{2, 1, 0}, {0, 2, 0}, {0, 0, 2}});
  FieldMatrix j2 = m({{2, 1, 0}, {0, 2, 1}, {0, 0, 2}});
  CHECK(char_poly(j1) == char_poly(j2));
  CHECK_FALSE(are_similar(j1, j2).similar);
  CHECK_FALSE(oracle::similar_by_dimensions(j1, j2));
}

TEST_CASE("cyclic decomposition spans with invariant-factor annihilators") {
  std::mt19937_64 rng(3);
  std::vector<FieldMatrix> cases{FieldMatrix::identity(3), m({{0, 1, 0}, {0, 0, 0}, {0, 0, 2}}),
                                 FieldMatrix::diagonal({1, -1, 1, -1})};
  for (int t = 0; t < 8; ++t) cases.push_back(oracle::random_matrix(rng, 2 + t % 3, t % 2 ? 3 : 1, 1));
  for (const auto& a : cases) {
    auto pieces = cyclic_decomposition(a);
    std::vector<CycPolynomial> ann;
    for (const auto& p : pieces) {
      ann.push_back(p.annihilator);
      CHECK(is_zero(poly_apply(p.annihilator, a, p.generator)));
    }
    CHECK(ann == invariant_factors(a));
  }
}

TEST_CASE("fitting_split examples and invariants") {
  FieldMatrix a = m({{0, 1, 0}, {0, 0, 0}, {0, 0, 2}});
  auto f = fitting_split(a);
  CHECK(f.null_part.rows() == 2);
  CHECK(f.invertible_part.rows() == 1);
  CHECK(f.null_part.row(0) == unit_vec(3, 0));
  CHECK(f.null_part.row(1) == unit_vec(3, 1));
  CHECK(f.invertible_part.row(0) == unit_vec(3, 2));
  CHECK(fitting_split(FieldMatrix::identity(3)).null_part.rows() == 0);
  CHECK(fitting_split(m({{0, 1}, {0, 0}})).invertible_part.rows() == 0);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    std::size_t n = 2 + rng() % 4;
    FieldMatrix b = oracle::random_matrix(rng, n, 1, 1);
    auto s = fitting_split(b);
    CHECK(s.null_part.rows() + s.invertible_part.rows() == n);
    restrict_to(b, s.null_part);
    FieldMatrix inv = restrict_to(b, s.invertible_part);
    if (inv.rows() > 0) {
      CHECK_FALSE(det(inv).is_zero());
    }
  }
}

TEST_CASE("nilpotent_jordan_chains examples") {
  auto c1 = nilpotent_jordan_chains(m({{0, 0}, {1, 0}}));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].size() == 2);
  auto c2 = nilpotent_jordan_chains(FieldMatrix(3, 3));
  CHECK(c2.size() == 3);
  FieldMatrix n = m({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  auto c3 = nilpotent_jordan_chains(n);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].size() == 3);
  CHECK(c3[1].size() == 1);
  CHECK_THROWS_AS(nilpotent_jordan_chains(FieldMatrix::identity(2)), Error);
  // Chains form a basis and end in the kernel.
  std::mt19937_64 rng(2);
  FieldMatrix p = oracle::random_invertible(rng, 4, 1);
  FieldMatrix conj = p * n * inverse(p);
  std::vector<Vec> all;
  for (const auto& ch : nilpotent_jordan_chains(conj)) {
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) CHECK(conj.apply(ch[i]) == ch[i + 1]);
    CHECK(is_zero(conj.apply(ch.back())));
    all.insert(all.end(), ch.begin(), ch.end());
  }
  CHECK(rank(FieldMatrix::from_rows(all)) == 4);
}

TEST_CASE("find_intertwiner examples") {
  auto r = find_intertwiner(FieldMatrix::diagonal({1, -1}), FieldMatrix::diagonal({-1, 1}), 0);
  CHECK(r.space.dimension() == 2);
  CHECK(r.x == m({{0, 1}, {1, 0}}));
  FieldMatrix j = m({{0, 1}, {0, 0}});
  auto s = find_intertwiner(j, j, 0);
  CHECK(s.space.dimension() == 2);
  CHECK(s.x == FieldMatrix::identity(2));
  try {
    find_intertwiner(FieldMatrix::identity(2), FieldMatrix::diagonal({1, -1}), 0);
    FAIL("expected NotSimilar");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSimilar);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 8; ++t) {
    FieldMatrix a = oracle::random_matrix(rng, 3, t % 2 ? 4 : 1, 2);
    FieldMatrix p = oracle::random_invertible(rng, 3, 1);
    FieldMatrix b = p * a * inverse(p);
    auto w = find_intertwiner(a, b, t);
    CHECK(w.x * a == b * w.x);
    CHECK_FALSE(det(w.x).is_zero());
  }
}

TEST_CASE("matrix_order examples and minimality") {
  CHECK(matrix_order(FieldMatrix::diagonal({-1}), 100).order == 2);
  CHECK(matrix_order(m({{1, 1}, {0, 1}}), 100).status == OrderStatus::ExceedsBound);
  CycScalar z3 = CycScalar::zeta(3);
  FieldMatrix phi = m({{-1, 0, 0}, {0, 0, z3}, {0, 1, 0}});
  auto o = matrix_order(phi, 1000);
  CHECK(o.status == OrderStatus::Finite);
  CHECK(o.order == 6);
  CHECK(matrix_order(FieldMatrix::diagonal({2, Rational(1, 2)}), 1000).status ==
        OrderStatus::ExceedsBound);
  CHECK_THROWS_AS(matrix_order(FieldMatrix(2, 2), 10), Error);
  for (unsigned k : {2u, 5u, 12u}) {
    FieldMatrix z = FieldMatrix::diagonal({CycScalar::zeta(k), CycScalar::zeta(k, 2)});
    auto r = matrix_order(z, 100);
    CHECK(r.order == k);
    CHECK(power(z, r.order).is_identity());
    for (unsigned d = 1; d < k; ++d)
      if (k % d == 0) CHECK_FALSE(power(z, d).is_identity());
  }
}

TEST_CASE("semisimple part") {
  FieldMatrix a = m({{2, 1, 0}, {0, 2, 0}, {0, 0, 3}});
  FieldMatrix s = semisimple_part(a);
  CHECK(s == FieldMatrix::diagonal({2, 2, 3}));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    FieldMatrix p = oracle::random_invertible(rng, 3, 1);
    FieldMatrix b = p * a * inverse(p);
    FieldMatrix sb = semisimple_part(b);
    CHECK(sb * b == b * sb);
    CHECK(power(b - sb, 3).is_zero());
    CHECK(sb == p * s * inverse(p));
  }
}
