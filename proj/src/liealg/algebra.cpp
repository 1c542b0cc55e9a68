#include <sstream>

#include "liefix/lie.hpp"

namespace liefix {

namespace {

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ")";
  return os.str();
}

}  // namespace

LieAlgebra LieAlgebra::validate(std::size_t dim, const BracketTable& brackets, std::string name,
                                unsigned conductor) {
  LieAlgebra g;
  g.n_ = dim;
  g.name_ = std::move(name);
  g.table_.assign(dim * dim, Vec(dim));
  unsigned m = 1;
  for (const auto& [key, v] : brackets) {
    auto [i, j] = key;
    if (i >= j || j >= dim)
      throw Error(ErrorKind::DimensionMismatch, "bracket index pair (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ") is not i<j<=dim");
    if (v.size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "bracket vector has length " + std::to_string(v.size()) +
                                                    ", expected " + std::to_string(dim));
    for (const auto& c : v) m = static_cast<unsigned>(lcm_u(m, c.conductor()));
    g.table_[i * dim + j] = v;
    Vec neg(dim);
    for (std::size_t k = 0; k < dim; ++k) neg[k] = -v[k];
    g.table_[j * dim + i] = std::move(neg);
  }
  if (conductor != 0) {
    if (conductor % m != 0)
      throw Error(ErrorKind::Conductor, "structure constants need conductor " + std::to_string(m) +
                                            ", declared " + std::to_string(conductor));
    m = conductor;
  }
  g.conductor_ = m;

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        Vec r = g.bracket(unit_vec(dim, i), g.bracket_basis(j, k));
        r = add(r, g.bracket(unit_vec(dim, j), g.bracket_basis(k, i)));
        r = add(r, g.bracket(unit_vec(dim, k), g.bracket_basis(i, j)));
        if (!is_zero(r))
          throw Error(ErrorKind::JacobiViolation,
                      "Jacobi identity fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          "," + std::to_string(k + 1) + "): residual " + format_vec(r));
      }
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::string name) {
  return validate(dim, {}, std::move(name));
}

LieAlgebra::BracketTable LieAlgebra::brackets() const {
  BracketTable out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!is_zero(bracket_basis(i, j))) out[{i, j}] = bracket_basis(i, j);
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Vec& c = table_[i * n_ + j];
      CycScalar s = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (!c[k].is_zero()) out[k] += s * c[k];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!is_zero(v)) return false;
  return true;
}

LieAlgebra LieAlgebra::change_basis(const FieldMatrix& change) const {
  if (change.rows() != n_ || !change.is_square())
    throw Error(ErrorKind::DimensionMismatch, "change of basis has the wrong size");
  FieldMatrix inv = inverse(change);
  BracketTable t;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) {
      Vec v = inv.apply(bracket(change.col(a), change.col(b)));
      if (!is_zero(v)) t[{a, b}] = std::move(v);
    }
  LieAlgebra h = validate(n_, t, name_);
  h.conductor_ = static_cast<unsigned>(lcm_u(conductor_, h.conductor_));
  return h;
}

FieldMatrix adjoint(const LieAlgebra& g, const Vec& x) {
  const std::size_t n = g.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(g.bracket(x, unit_vec(n, j)));
  if (n == 0) return FieldMatrix(0, 0);
  return FieldMatrix::from_columns(cols);
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      Vec b = g.bracket(u.basis().row(i), v.basis().row(j));
      if (!is_zero(b)) out.push_back(std::move(b));
    }
  return Subspace::span(g.dim(), out);
}

}  // namespace liefix
