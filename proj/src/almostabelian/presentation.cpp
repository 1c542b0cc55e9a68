#include "liefix/almost.hpp"

namespace liefix {

namespace {

AlmostAbelianPresentation assemble(const LieAlgebra& g, FieldMatrix rows, Vec v) {
  AlmostAbelianPresentation p;
  p.algebra = g;
  p.ideal = Subspace::span(rows);
  p.ideal_basis = std::move(rows);
  p.v = std::move(v);
  p.action = restrict_to(adjoint(g, p.v), p.ideal_basis);
  return p;
}

// A hyperplane ker(alpha) with alpha(e_w) = 1 is an abelian ideal exactly
// when [x,y] = alpha(x)[e_w,y] - alpha(y)[e_w,x] for all x, y and alpha
// vanishes on [g,g]. Both conditions are linear in alpha.
std::optional<Vec> abelian_hyperplane(const LieAlgebra& g, std::size_t w) {
  const std::size_t n = g.dim();
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& cij = g.bracket_basis(i, j);
      const Vec& cwj = g.bracket_basis(w, j);
      const Vec& cwi = g.bracket_basis(w, i);
      for (std::size_t k = 0; k < n; ++k) {
        // alpha_i cwj_k - alpha_j cwi_k = cij_k
        Vec r(n);
        r[i] += cwj[k];
        r[j] -= cwi[k];
        if (is_zero(r) && cij[k].is_zero()) continue;
        rows.push_back(std::move(r));
        rhs.push_back(cij[k]);
      }
      Vec r(n);
      for (std::size_t k = 0; k < n; ++k) r[k] = cij[k];
      if (!is_zero(r)) {
        rows.push_back(std::move(r));
        rhs.push_back(CycScalar());
      }
    }
  Vec fix(n);
  fix[w] = CycScalar(1);
  rows.push_back(fix);
  rhs.push_back(CycScalar(1));
  return solve(FieldMatrix::from_rows(rows), rhs);
}

}  // namespace

AlmostAbelianPresentation detect_presentation(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (g.is_abelian())
    throw Error(ErrorKind::NotAlmostAbelian, "abelian algebras are excluded by definition");
  for (std::size_t w = 0; w < n; ++w) {
    auto alpha = abelian_hyperplane(g, w);
    if (!alpha) continue;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == w) continue;
      Vec b = unit_vec(n, j);
      b[w] = -(*alpha)[j];
      basis.push_back(std::move(b));
    }
    return make_presentation(g, FieldMatrix::from_rows(basis), unit_vec(n, w));
  }
  throw Error(ErrorKind::NotAlmostAbelian, "no abelian ideal of codimension one");
}

AlmostAbelianPresentation make_presentation(const LieAlgebra& g, const FieldMatrix& ideal_rows,
                                            const Vec& v) {
  const std::size_t n = g.dim();
  if (ideal_rows.cols() != n || v.size() != n || ideal_rows.rows() + 1 != n)
    throw Error(ErrorKind::NotAlmostAbelian, "ideal must be a hyperplane of the algebra");
  Subspace a = Subspace::span(ideal_rows);
  if (a.dim() != n - 1) throw Error(ErrorKind::NotAlmostAbelian, "ideal rows are dependent");
  if (a.contains(v)) throw Error(ErrorKind::NotAlmostAbelian, "v lies in the ideal");
  if (!subspace_bracket(g, a, a).is_zero())
    throw Error(ErrorKind::NotAlmostAbelian, "ideal is not abelian");
  if (!is_ideal(g, a)) throw Error(ErrorKind::NotAlmostAbelian, "hyperplane is not an ideal");
  if (g.is_abelian()) throw Error(ErrorKind::NotAlmostAbelian, "abelian algebras are excluded");
  return assemble(g, ideal_rows, v);
}

}  // namespace liefix
