#include <random>

#include "liefix/decompose.hpp"

namespace liefix {

namespace {

FieldMatrix column_space_rows(const FieldMatrix& m) {
  Rref r = rref(m.transpose());
  const std::size_t k = r.pivots.size();
  if (k == 0) return FieldMatrix(0, m.rows());
  return r.reduced.block(0, 0, k, m.rows());
}

}  // namespace

FittingSplit fitting_split(const FieldMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "fitting_split needs a square matrix");
  FieldMatrix an = power(a, a.rows());
  return {kernel(an), column_space_rows(an)};
}

FieldMatrix restrict_to(const FieldMatrix& a, const FieldMatrix& basis_rows) {
  const std::size_t k = basis_rows.rows();
  FieldMatrix out(k, k);
  if (k == 0) return out;
  FieldMatrix bt = basis_rows.transpose();
  for (std::size_t i = 0; i < k; ++i) {
    auto c = solve(bt, a.apply(basis_rows.row(i)));
    if (!c) throw Error(ErrorKind::PreconditionViolated, "subspace is not invariant");
    for (std::size_t j = 0; j < k; ++j) out.at(j, i) = (*c)[j];
  }
  return out;
}

std::vector<std::vector<Vec>> nilpotent_jordan_chains(const FieldMatrix& nmat) {
  if (!nmat.is_square())
    throw Error(ErrorKind::DimensionMismatch, "jordan chains need a square matrix");
  const std::size_t n = nmat.rows();
  if (!power(nmat, n).is_zero()) throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
  std::vector<std::vector<Vec>> chains;
  if (n == 0) return chains;
  // kernels[j] = ker N^j
  std::vector<FieldMatrix> kernels{FieldMatrix(0, n)};
  FieldMatrix pw = FieldMatrix::identity(n);
  std::size_t index = 0;
  while (kernels.back().rows() < n) {
    pw = pw * nmat;
    kernels.push_back(kernel(pw));
    ++index;
  }
  for (std::size_t j = index; j >= 1; --j) {
    std::vector<Vec> span = kernels[j - 1].row_list();
    // Images of longer chains at this level.
    for (const auto& ch : chains) span.push_back(ch[ch.size() - j]);
    std::size_t r = span.empty() ? 0 : rank(FieldMatrix::from_rows(span));
    for (const auto& cand : kernels[j].row_list()) {
      span.push_back(cand);
      std::size_t r2 = rank(FieldMatrix::from_rows(span));
      if (r2 == r) {
        span.pop_back();
        continue;
      }
      r = r2;
      std::vector<Vec> chain{cand};
      for (std::size_t s = 1; s < j; ++s) chain.push_back(nmat.apply(chain.back()));
      chains.push_back(std::move(chain));
    }
  }
  return chains;
}

SolutionSpace intertwiner_space(const FieldMatrix& a, const FieldMatrix& b) {
  if (!a.is_square() || !b.is_square())
    throw Error(ErrorKind::DimensionMismatch, "intertwiners need square matrices");
  const std::size_t n = a.rows(), m = b.rows();
  // X is m x n, unknown X(r,c) at r*n + c; equation (r,c) of X A - B X.
  LinearSystem sys(m * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      LinearSystem::Row row;
      for (std::size_t k = 0; k < n; ++k)
        if (!a.at(k, c).is_zero()) row[r * n + k] += a.at(k, c);
      for (std::size_t k = 0; k < m; ++k)
        if (!b.at(r, k).is_zero()) row[k * n + c] -= b.at(r, k);
      sys.add(std::move(row));
    }
  SolutionSpace out{m, n, {}};
  FieldMatrix k = sys.kernel();
  for (std::size_t i = 0; i < k.rows(); ++i) {
    FieldMatrix x(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) x.at(r, c) = k.at(i, r * n + c);
    out.basis.push_back(std::move(x));
  }
  return out;
}

Intertwiner find_intertwiner(const FieldMatrix& a, const FieldMatrix& b, std::uint64_t seed,
                             unsigned budget) {
  if (!are_similar(a, b).similar)
    throw Error(ErrorKind::NotSimilar, "matrices are not similar; no invertible intertwiner");
  Intertwiner out{FieldMatrix::identity(a.rows()), intertwiner_space(a, b)};
  if (a == b) return out;
  const auto& basis = out.space.basis;
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    FieldMatrix x(a.rows(), a.rows());
    for (const auto& bx : basis) {
      long c = attempt == 0 ? 1 : static_cast<long>(rng() % 7) - 3;
      if (c != 0) x = x + CycScalar(c) * bx;
    }
    if (!det(x).is_zero()) {
      out.x = std::move(x);
      return out;
    }
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no invertible intertwiner found within " + std::to_string(budget) + " samples");
}

CycPolynomial squarefree_part(const CycPolynomial& p) {
  CycPolynomial g = CycPolynomial::gcd(p, p.derivative());
  CycPolynomial q, r;
  CycPolynomial::divmod(p, g, q, r);
  return q.monic();
}

FieldMatrix semisimple_part(const FieldMatrix& a) {
  CycPolynomial q = squarefree_part(char_poly(a));
  CycPolynomial dq = q.derivative();
  FieldMatrix s = a;
  for (int iter = 0; iter < 64; ++iter) {
    FieldMatrix qs = poly_eval(q, s);
    if (qs.is_zero()) return s;
    s = s - qs * inverse(poly_eval(dq, s));
  }
  throw Error(ErrorKind::PreconditionViolated, "semisimple part iteration did not settle");
}

}  // namespace liefix
