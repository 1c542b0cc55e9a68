// Independent reference computations used only by the tests. They favour
// brute force over speed and avoid the library routines they check.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "liefix/lie.hpp"

namespace oracle {

using liefix::CycScalar;
using liefix::FieldMatrix;
using liefix::Rational;

inline CycScalar small_scalar(std::mt19937_64& rng, unsigned m, long span = 3) {
  std::vector<Rational> c(liefix::totient(m));
  for (auto& x : c) x = Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
  return CycScalar::from_poly(m, c);
}

inline FieldMatrix random_matrix(std::mt19937_64& rng, std::size_t n, unsigned m, long span = 3) {
  FieldMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.at(r, c) = small_scalar(rng, m, span);
  return a;
}

inline FieldMatrix random_invertible(std::mt19937_64& rng, std::size_t n, unsigned m) {
  for (;;) {
    FieldMatrix p = random_matrix(rng, n, m, 2);
    if (!liefix::det(p).is_zero()) return p;
  }
}

/// Dimension of {Z : Z X = Y Z} by dense elimination of the Kronecker system.
inline std::size_t commutant_dim(const FieldMatrix& x, const FieldMatrix& y) {
  const std::size_t n = x.rows();
  FieldMatrix k(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t eq = r * n + c;
      for (std::size_t j = 0; j < n; ++j) {
        k.at(eq, r * n + j) += x.at(j, c);
        k.at(eq, j * n + c) -= y.at(r, j);
      }
    }
  return n * n - liefix::rank(k);
}

/// Byrnes-Gauger criterion for similarity.
inline bool similar_by_dimensions(const FieldMatrix& a, const FieldMatrix& b) {
  std::size_t aa = commutant_dim(a, a);
  return aa == commutant_dim(a, b) && aa == commutant_dim(b, b);
}

/// Leibniz determinant by permutation expansion (n <= 6).
inline CycScalar permutation_det(const FieldMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  CycScalar total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    CycScalar term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Block diagonal matrix diag(B, zeta B, ..., zeta^{n-1} B).
inline FieldMatrix zeta_block(const FieldMatrix& b, unsigned n) {
  const std::size_t k = b.rows();
  FieldMatrix out(k * n, k * n);
  for (unsigned i = 0; i < n; ++i) {
    CycScalar z = CycScalar::zeta(n, i);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) out.at(i * k + r, i * k + c) = z * b.at(r, c);
  }
  return out;
}


struct Term {
  std::size_t i, j;  // 1-based, i < j
  std::vector<std::pair<std::size_t, CycScalar>> value;
};

inline liefix::LieAlgebra make_algebra(std::size_t n, const std::vector<Term>& terms) {
  liefix::LieAlgebra::BracketTable t;
  for (const auto& b : terms) {
    liefix::Vec v(n);
    for (const auto& [k, c] : b.value) v[k - 1] += c;
    t[{b.i - 1, b.j - 1}] = v;
  }
  return liefix::LieAlgebra::validate(n, t);
}

/// Leibniz system over all ordered pairs, dense; returns the dimension of Der.
inline std::size_t derivation_dim(const liefix::LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Equation (i, j, r): sum_k c_ij^k D(r,k) - sum_s D(s,i) c_sj^r - sum_s D(s,j) c_is^r.
  FieldMatrix big(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::size_t row = (i * n + j) * n + r;
        for (std::size_t k = 0; k < n; ++k) {
          big.at(row, r * n + k) += g.bracket_basis(i, j)[k];
          big.at(row, k * n + i) -= g.bracket_basis(k, j)[r];
          big.at(row, k * n + j) -= g.bracket_basis(i, k)[r];
        }
      }
  return n * n - liefix::rank(big);
}

/// Polynomial in variables t_1..t_d with field coefficients.
using Monomial = std::vector<unsigned char>;
using MultiPoly = std::map<Monomial, CycScalar>;

inline void add_into(MultiPoly& p, const Monomial& m, const CycScalar& c) {
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

/// True when every power sum tr((sum_i t_i D_i)^k), k = 1..n, vanishes as a
/// polynomial in the t_i. By Newton's identities this is the same as the
/// characteristic polynomial of the generic derivation being t^n.
inline bool generic_derivation_nilpotent(const std::vector<FieldMatrix>& ds) {
  if (ds.empty()) return true;
  const std::size_t n = ds[0].rows(), d = ds.size();
  std::vector<MultiPoly> x(n * n);
  for (std::size_t v = 0; v < d; ++v) {
    Monomial m(d, 0);
    m[v] = 1;
    for (std::size_t e = 0; e < n * n; ++e)
      if (!ds[v].at(e / n, e % n).is_zero()) add_into(x[e], m, ds[v].at(e / n, e % n));
  }
  std::vector<MultiPoly> y = x;
  for (std::size_t k = 1; k <= n; ++k) {
    MultiPoly tr;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [m, c] : y[i * n + i]) add_into(tr, m, c);
    if (!tr.empty()) return false;
    if (k == n) break;
    std::vector<MultiPoly> next(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        for (const auto& [m1, c1] : y[r * n + s])
          for (std::size_t c = 0; c < n; ++c)
            for (const auto& [m2, c2] : x[s * n + c]) {
              Monomial m = m1;
              for (std::size_t v = 0; v < d; ++v) m[v] += m2[v];
              add_into(next[r * n + c], m, c1 * c2);
            }
    y = std::move(next);
  }
  return true;
}

/// Random nilpotent algebra: the Lie subalgebra generated by a few random
/// strictly upper triangular matrices, in a basis of words in the generators.
inline std::optional<liefix::LieAlgebra> random_nilpotent(std::mt19937_64& rng, std::size_t max_dim) {
  const std::size_t size = 3 + rng() % 3;
  const std::size_t gens = 2 + rng() % 2;
  auto flat = [size](const FieldMatrix& a) {
    liefix::Vec v;
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) v.push_back(a.at(r, c));
    return v;
  };
  std::vector<FieldMatrix> basis;
  auto try_add = [&](const FieldMatrix& a) {
    std::vector<liefix::Vec> rows;
    for (const auto& b : basis) rows.push_back(flat(b));
    rows.push_back(flat(a));
    if (liefix::rank(FieldMatrix::from_rows(rows)) == rows.size()) {
      basis.push_back(a);
      return true;
    }
    return false;
  };
  for (std::size_t k = 0; k < gens; ++k) {
    FieldMatrix a(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = r + 1; c < size; ++c)
        if (rng() % 2) a.at(r, c) = CycScalar(static_cast<long>(rng() % 5) - 2);
    try_add(a);
  }
  for (std::size_t i = 0; i < basis.size() && basis.size() <= max_dim; ++i)
    for (std::size_t j = 0; j < i && basis.size() <= max_dim; ++j)
      try_add(basis[i] * basis[j] - basis[j] * basis[i]);
  if (basis.size() > max_dim || basis.size() < 2) return std::nullopt;
  std::vector<liefix::Vec> cols;
  for (const auto& b : basis) cols.push_back(flat(b));
  FieldMatrix coords = FieldMatrix::from_columns(cols);
  const std::size_t n = basis.size();
  liefix::LieAlgebra::BracketTable t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = liefix::solve(coords, flat(basis[i] * basis[j] - basis[j] * basis[i]));
      if (!v) return std::nullopt;
      if (!liefix::is_zero(*v)) t[{i, j}] = *v;
    }
  return liefix::LieAlgebra::validate(n, t);
}


/// h ⋊ <x> with [x, y] = D y; x becomes the last basis vector.
inline liefix::LieAlgebra semidirect(const liefix::LieAlgebra& h, const FieldMatrix& d) {
  const std::size_t n = h.dim();
  liefix::LieAlgebra::BracketTable t;
  for (const auto& [key, v] : h.brackets()) {
    liefix::Vec w = v;
    w.push_back(CycScalar());
    t[key] = w;
  }
  for (std::size_t j = 0; j < n; ++j) {
    // [e_j, x] = -D e_j
    liefix::Vec w(n + 1);
    for (std::size_t r = 0; r < n; ++r) w[r] = -d.at(r, j);
    if (!liefix::is_zero(w)) t[{j, n}] = w;
  }
  return liefix::LieAlgebra::validate(n + 1, t);
}

/// Abelian K^k extended by v acting through A.
inline liefix::LieAlgebra almost_abelian(const FieldMatrix& a) {
  return semidirect(liefix::LieAlgebra::abelian(a.rows()), a);
}

/// Derivation basis from the dense Leibniz system over all ordered pairs.
inline std::vector<FieldMatrix> derivation_basis(const liefix::LieAlgebra& g) {
  const std::size_t n = g.dim();
  FieldMatrix big(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::size_t row = (i * n + j) * n + r;
        for (std::size_t k = 0; k < n; ++k) {
          big.at(row, r * n + k) += g.bracket_basis(i, j)[k];
          big.at(row, k * n + i) -= g.bracket_basis(k, j)[r];
          big.at(row, k * n + j) -= g.bracket_basis(i, k)[r];
        }
      }
  FieldMatrix ker = liefix::kernel(big);
  std::vector<FieldMatrix> out;
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    FieldMatrix d(n, n);
    for (std::size_t e = 0; e < n * n; ++e) d.at(e / n, e % n) = ker.at(b, e);
    out.push_back(d);
  }
  return out;
}

/// [x, y] straight from the structure constants.
inline liefix::Vec bracket_by_table(const liefix::LieAlgebra& g, const liefix::Vec& x, const liefix::Vec& y) {
  const std::size_t n = g.dim();
  liefix::Vec out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (x[a].is_zero() || y[b].is_zero()) continue;
      CycScalar c = x[a] * y[b];
      const liefix::Vec& v = g.bracket_basis(a, b);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) out[k] += c * v[k];
    }
  return out;
}

/// phi [e_i, e_j] = [phi e_i, phi e_j] for all pairs, column j of phi being phi(e_j).
inline bool preserves_brackets_by_table(const liefix::LieAlgebra& g, const FieldMatrix& phi) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      liefix::Vec lhs(n);
      const liefix::Vec& b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero())
          for (std::size_t r = 0; r < n; ++r) lhs[r] += b[k] * phi.at(r, k);
      if (lhs != bracket_by_table(g, phi.col(i), phi.col(j))) return false;
    }
  return true;
}

/// Smallest k <= bound with phi^k = I by repeated multiplication; 0 if none.
inline unsigned long order_by_powers(const FieldMatrix& phi, unsigned long bound = 200) {
  FieldMatrix p = phi;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * phi;
  }
  return 0;
}

/// Dimension 7 with [e2,e3] = a5 e5 + a6 e6 + a7 e7, [e2,e4] = b6 e6 + b7 e7,
/// [e2,e5] = c7 e7 and the rest forced by ad(e1) being a derivation.
inline std::optional<liefix::LieAlgebra> perturbed7(const std::array<long, 6>& c) {
  using liefix::Vec;
  const std::size_t n = 7;
  std::vector<std::vector<Vec>> t(n + 2, std::vector<Vec>(n + 2, Vec(n)));
  auto e = [&](std::size_t k) { return k <= n ? liefix::unit_vec(n, k - 1) : Vec(n); };
  auto s = [](long v) { return CycScalar(v); };
  for (std::size_t i = 2; i <= n; ++i) t[1][i] = e(i + 1);
  t[2][3] = liefix::add(liefix::add(liefix::scale(s(c[0]), e(5)), liefix::scale(s(c[1]), e(6))),
                        liefix::scale(s(c[2]), e(7)));
  t[2][4] = liefix::add(liefix::scale(s(c[3]), e(6)), liefix::scale(s(c[4]), e(7)));
  t[2][5] = liefix::scale(s(c[5]), e(7));
  auto shift = [&](const Vec& v) {
    Vec o(n);
    for (std::size_t k = 0; k + 1 < n; ++k) o[k + 1] = v[k];
    return o;
  };
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j)
      t[i + 1][j] = liefix::sub(shift(t[i][j]), j < n ? t[i][j + 1] : Vec(n));
  liefix::LieAlgebra::BracketTable bt;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!liefix::is_zero(t[i][j])) bt[{i - 1, j - 1}] = t[i][j];
  try {
    return liefix::LieAlgebra::validate(n, bt);
  } catch (const liefix::Error&) {
    return std::nullopt;
  }
}

/// Filiform of dimension 7 whose derivations are all nilpotent.
inline liefix::LieAlgebra cnla7() { return *perturbed7({0, 1, 0, 0, 1, 1}); }

}  // namespace oracle
