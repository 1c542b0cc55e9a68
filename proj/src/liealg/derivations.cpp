#include <random>

#include "liefix/lie.hpp"

namespace liefix {

SolutionSpace derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  LinearSystem sys(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], component r.
        LinearSystem::Row row;
        const Vec& cij = g.bracket_basis(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!cij[k].is_zero()) row[var(r, k)] += cij[k];
        for (std::size_t s = 0; s < n; ++s) {
          const CycScalar& a = g.bracket_basis(s, j)[r];
          if (!a.is_zero()) row[var(s, i)] -= a;
          const CycScalar& b = g.bracket_basis(i, s)[r];
          if (!b.is_zero()) row[var(s, j)] -= b;
        }
        for (auto it = row.begin(); it != row.end();)
          it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (!row.empty()) sys.add(std::move(row));
      }
  SolutionSpace out{n, n, {}};
  FieldMatrix k = sys.kernel();
  for (std::size_t b = 0; b < k.rows(); ++b) {
    FieldMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d.at(r, c) = k.at(b, var(r, c));
    out.basis.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const LieAlgebra& g, const FieldMatrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = d.apply(g.bracket_basis(i, j));
      Vec rhs = add(g.bracket(d.col(i), unit_vec(n, j)), g.bracket(unit_vec(n, i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

CnlaResult is_cnla(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  CnlaResult out;
  out.derivations = derivation_algebra(g);
  const auto& basis = out.derivations.basis;
  out.chain.push_back(Subspace::whole(n));
  while (!out.chain.back().is_zero()) {
    std::vector<Vec> images;
    const FieldMatrix& rows = out.chain.back().basis();
    for (const auto& d : basis)
      for (std::size_t i = 0; i < rows.rows(); ++i) {
        Vec v = d.apply(rows.row(i));
        if (!is_zero(v)) images.push_back(std::move(v));
      }
    Subspace next = Subspace::span(n, images);
    if (next.dim() == out.chain.back().dim()) break;
    out.chain.push_back(std::move(next));
  }
  out.cnla = out.chain.back().is_zero();
  if (out.cnla) return out;

  const CycPolynomial nil = CycPolynomial::monomial(CycScalar(1), n);
  auto non_nilpotent = [&](const FieldMatrix& d) { return !(char_poly(d) == nil); };
  for (const auto& d : basis)
    if (non_nilpotent(d)) {
      out.non_nilpotent = d;
      return out;
    }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    FieldMatrix d(n, n);
    for (const auto& b : basis) {
      long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) d = d + CycScalar(c) * b;
    }
    if (non_nilpotent(d)) {
      out.non_nilpotent = d;
      return out;
    }
  }
  throw Error(ErrorKind::SamplingExhausted, "no non-nilpotent derivation sampled");
}

bool preserves_brackets(const LieAlgebra& g, const FieldMatrix& phi) {
  const std::size_t n = g.dim();
  if (phi.rows() != n || phi.cols() != n) return false;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(phi.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (phi.apply(g.bracket_basis(i, j)) != g.bracket(images[i], images[j])) return false;
  return true;
}

AutomorphismReport check_automorphism(const LieAlgebra& g, const FieldMatrix& phi,
                                      unsigned long order_bound) {
  const std::size_t n = g.dim();
  if (phi.rows() != n || phi.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "map size does not match the algebra");
  AutomorphismReport rep;
  rep.map = phi;
  rep.det = det(phi);
  rep.is_morphism = !rep.det.is_zero() && preserves_brackets(g, phi);
  rep.det_phi_minus_id = det(phi - FieldMatrix::identity(n));
  rep.is_fpf = !rep.det_phi_minus_id.is_zero();
  if (!rep.det.is_zero()) rep.order = matrix_order(phi, order_bound);
  return rep;
}

}  // namespace liefix
