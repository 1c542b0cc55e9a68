#include <random>

#include "liefix/filiform.hpp"

namespace liefix {

bool is_filiform(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n < 3) return false;
  auto chain = series(g, SeriesKind::LowerCentral);
  // g, g^2, ..., g^{n-1}, 0 with dim g^i = n - i for i >= 2.
  if (chain.links.size() != n || !chain.links.back().is_zero()) return false;
  for (std::size_t i = 2; i < n; ++i)
    if (chain.links[i - 1].dim() != n - i) return false;
  return true;
}

namespace {

CycScalar coefficient(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  return g.bracket_basis(i, j)[k];
}

// Conditions of an adapted basis, 0-based: e_0 acts as the shift, and
// [e_i, e_{n-1-i}] = (-1)^{i+1} alpha e_{n-1}.
bool adapted(const LieAlgebra& h, CycScalar& alpha) {
  const std::size_t n = h.dim();
  for (std::size_t i = 1; i < n; ++i) {
    Vec expect = i + 1 < n ? unit_vec(n, i + 1) : Vec(n);
    if (h.bracket_basis(0, i) != expect) return false;
  }
  // [e_2, e_3] in span{e_5, ...}; for n = 4 that span is empty and the
  // e_4 part is alpha.
  const Vec& b = h.bracket_basis(1, 2);
  for (std::size_t k = 0; k < std::min<std::size_t>(4, n); ++k)
    if (!b[k].is_zero() && !(n == 4 && k == 3)) return false;
  alpha = n % 2 == 0 ? coefficient(h, 1, n - 2, n - 1) : CycScalar();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    std::size_t j = n - 1 - i;
    if (i == j) continue;
    CycScalar sign((i + 1) % 2 == 0 ? 1 : -1);
    Vec expect = scale(sign * alpha, unit_vec(n, n - 1));
    if (h.bracket_basis(i, j) != expect) return false;
  }
  // [e_i, e_j] in span{e_{i+j}, ...} for 1-based i + j <= n.
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t lowest = i + j + 1;  // 0-based index of e_{i+j} in 1-based terms
      if (lowest > n - 1) continue;
      const Vec& b = h.bracket_basis(i, j);
      for (std::size_t k = 0; k < lowest; ++k)
        if (!b[k].is_zero()) return false;
    }
  return true;
}

}  // namespace

FiliformPresentation find_adapted_basis(const LieAlgebra& g, std::uint64_t seed) {
  if (!is_filiform(g)) throw Error(ErrorKind::NotFiliform, "algebra is not filiform");
  const std::size_t n = g.dim();
  std::mt19937_64 rng(seed);
  auto random_vec = [&]() {
    Vec v(n);
    for (auto& x : v) x = CycScalar(static_cast<long>(rng() % 7) - 3);
    return v;
  };
  for (unsigned attempt = 0; attempt < 64; ++attempt) {
    Vec e1 = attempt < n ? unit_vec(n, attempt) : random_vec();
    FieldMatrix ad1 = adjoint(g, e1);
    FieldMatrix top = power(ad1, n - 2);
    if (top.is_zero()) continue;
    // e2: first standard vector (then a random one) reaching the center.
    Vec e2;
    for (std::size_t j = 0; j < n && e2.empty(); ++j)
      if (j != attempt && !is_zero(top.apply(unit_vec(n, j)))) e2 = unit_vec(n, j);
    if (e2.empty()) continue;
    auto build = [&](const Vec& second) {
      std::vector<Vec> cols{e1, second};
      for (std::size_t i = 2; i < n; ++i) cols.push_back(ad1.apply(cols.back()));
      return FieldMatrix::from_columns(cols);
    };
    FieldMatrix change = build(e2);
    if (det(change).is_zero()) continue;
    LieAlgebra h = g.change_basis(change);
    if (n >= 5) {
      // Remove the e_4 part of [e_2, e_3] by shifting e_2 along e_1.
      CycScalar a = coefficient(h, 1, 2, 3);
      if (!a.is_zero()) {
        e2 = sub(e2, scale(a, e1));
        change = build(e2);
        h = g.change_basis(change);
      }
    }
    CycScalar alpha;
    if (!adapted(h, alpha)) continue;
    if (n % 2 == 0 && !alpha.is_zero() && !alpha.is_one()) {
      e2 = scale(alpha.inverse(), e2);
      change = build(e2);
      h = g.change_basis(change);
      if (!adapted(h, alpha)) continue;
    }
    FiliformPresentation p;
    p.algebra = g;
    p.change = std::move(change);
    p.adapted = std::move(h);
    p.alpha = alpha;
    return p;
  }
  throw Error(ErrorKind::AdaptationFailed, "no adapted basis within 64 attempts");
}

GradedType graded_type(const FiliformPresentation& p) {
  return {p.alpha.is_zero() ? GradedTag::L : GradedTag::Q, p.adapted.dim()};
}

}  // namespace liefix
