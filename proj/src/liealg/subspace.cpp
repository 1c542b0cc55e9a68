#include "liefix/lie.hpp"

namespace liefix {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "vector outside ambient space");
  Rref r = rref(FieldMatrix::from_rows(vectors));
  const std::size_t k = r.pivots.size();
  s.basis_ = k ? r.reduced.block(0, 0, k, ambient) : FieldMatrix(0, ambient);
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::span(const FieldMatrix& rows) { return span(rows.cols(), rows.row_list()); }

Subspace Subspace::whole(std::size_t n) { return span(FieldMatrix::identity(n)); }

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec out = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    CycScalar c = out[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!basis_.at(i, j).is_zero()) out[j] -= c * basis_.at(i, j);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return liefix::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> rows = basis_.row_list();
  for (auto& r : other.basis_.row_list()) rows.push_back(std::move(r));
  return span(n_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (dim() == 0 || other.dim() == 0) return Subspace(n_);
  // a U = b V  <=>  (a, -b) in the kernel of the stacked transpose.
  const std::size_t p = dim(), q = other.dim();
  FieldMatrix m(n_, p + q);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < p; ++i) m.at(j, i) = basis_.at(i, j);
    for (std::size_t i = 0; i < q; ++i) m.at(j, p + i) = -other.basis_.at(i, j);
  }
  FieldMatrix k = kernel(m);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    Vec v(n_);
    for (std::size_t i = 0; i < p; ++i)
      if (!k.at(r, i).is_zero()) v = add(v, scale(k.at(r, i), basis_.row(i)));
    vecs.push_back(std::move(v));
  }
  return span(n_, vecs);
}

}  // namespace liefix
