#include "liefix/matrix.hpp"

#include <string>

namespace liefix {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycScalar(1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  FieldMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == m.cols_, "ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

FieldMatrix FieldMatrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return {};
  FieldMatrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == m.rows_, "ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

FieldMatrix FieldMatrix::diagonal(const Vec& d) {
  FieldMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Vec FieldMatrix::row(std::size_t r) const {
  return Vec(e_.begin() + static_cast<long>(r * cols_),
             e_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec FieldMatrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vec> FieldMatrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

unsigned FieldMatrix::conductor() const {
  std::uint64_t m = 1;
  for (const auto& x : e_) m = lcm_u(m, x.conductor());
  return static_cast<unsigned>(m);
}

FieldMatrix FieldMatrix::lifted(unsigned m) const {
  FieldMatrix out = *this;
  for (auto& x : out.e_) x = x.lifted(m);
  return out;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool FieldMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FieldMatrix FieldMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  FieldMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.at(r, c) = at(r0 + r, c0 + c);
  return b;
}

CycScalar FieldMatrix::trace() const {
  require(is_square(), "trace of non-square matrix");
  CycScalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Vec FieldMatrix::apply(const Vec& x) const {
  require(x.size() == cols_, "apply: size mismatch");
  Vec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    CycScalar acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || x[c].is_zero()) continue;
      acc += at(r, c) * x[c];
    }
    y[r] = std::move(acc);
  }
  return y;
}

FieldMatrix FieldMatrix::operator-() const {
  FieldMatrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "add: shape mismatch");
  FieldMatrix m = a;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
  return m;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "sub: shape mismatch");
  FieldMatrix m = a;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.cols_ == b.rows_, "mul: shape mismatch");
  FieldMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycScalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycScalar& y = b.at(k, j);
        if (y.is_zero()) continue;
        m.at(i, j) += x * y;
      }
    }
  return m;
}

FieldMatrix operator*(const CycScalar& s, const FieldMatrix& a) {
  FieldMatrix m = a;
  for (auto& x : m.e_) x = s * x;
  return m;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = CycScalar(1);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
  return v;
}

Vec scale(const CycScalar& s, const Vec& a) {
  Vec v = a;
  for (auto& x : v) x = s * x;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rref rref(const FieldMatrix& a) {
  Rref out{a, {}};
  FieldMatrix& m = out.reduced;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
    CycScalar inv = m.at(pr, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m.at(pr, j).is_zero()) m.at(pr, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || m.at(r, c).is_zero()) continue;
      CycScalar f = m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m.at(pr, j).is_zero()) m.at(r, j) -= f * m.at(pr, j);
    }
    out.pivots.push_back(c);
    ++pr;
  }
  return out;
}

std::size_t rank(const FieldMatrix& a) { return rref(a).pivots.size(); }

FieldMatrix kernel(const FieldMatrix& a) {
  Rref r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = CycScalar(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return FieldMatrix(0, n);
  return FieldMatrix::from_rows(basis);
}

CycScalar det(const FieldMatrix& a) {
  require(a.is_square(), "det of non-square matrix");
  FieldMatrix m = a;
  const std::size_t n = m.rows();
  CycScalar d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m.at(sel, c).is_zero()) ++sel;
    if (sel == n) return CycScalar();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    CycScalar inv = m.at(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      CycScalar f = m.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m.at(c, j).is_zero()) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

FieldMatrix inverse(const FieldMatrix& a) {
  require(a.is_square(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return FieldMatrix(0, 0);
  FieldMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = CycScalar(1);
  }
  Rref r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  return r.reduced.block(0, n, n, n);
}

std::optional<Vec> solve(const FieldMatrix& a, const Vec& b) {
  require(b.size() == a.rows(), "solve: size mismatch");
  const std::size_t n = a.cols();
  FieldMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced.at(i, n);
  return x;
}

FieldMatrix power(const FieldMatrix& a, unsigned long k) {
  require(a.is_square(), "power of non-square matrix");
  FieldMatrix result = FieldMatrix::identity(a.rows());
  FieldMatrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CycPolynomial char_poly(const FieldMatrix& a) {
  require(a.is_square(), "char_poly of non-square matrix");
  const std::size_t n = a.rows();
  FieldMatrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t sel = m;
    while (sel < n && h.at(sel, m - 1).is_zero()) ++sel;
    if (sel == n) continue;
    if (sel != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(sel, j), h.at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, sel), h.at(i, m));
    }
    CycScalar inv = h.at(m, m - 1).inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h.at(j, m - 1).is_zero()) continue;
      CycScalar u = h.at(j, m - 1) * inv;
      for (std::size_t k = 0; k < n; ++k)
        if (!h.at(m, k).is_zero()) h.at(j, k) -= u * h.at(m, k);
      for (std::size_t i = 0; i < n; ++i)
        if (!h.at(i, j).is_zero()) h.at(i, m) += u * h.at(i, j);
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<CycPolynomial> p(n + 1);
  p[0] = CycPolynomial::constant(CycScalar(1));
  const CycPolynomial t = CycPolynomial::monomial(CycScalar(1), 1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - CycPolynomial::constant(h.at(k - 1, k - 1))) * p[k - 1];
    CycScalar prod(1);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h.at(i + 1, i);
      if (prod.is_zero()) break;
      const CycScalar& hik = h.at(i, k - 1);
      if (hik.is_zero()) continue;
      p[k] = p[k] - (hik * prod) * p[i];
    }
  }
  return p[n];
}

FieldMatrix poly_eval(const CycPolynomial& p, const FieldMatrix& a) {
  const std::size_t n = a.rows();
  FieldMatrix acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * a;
    if (!c[k].is_zero())
      for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += c[k];
  }
  return acc;
}

Vec poly_apply(const CycPolynomial& p, const FieldMatrix& a, const Vec& x) {
  Vec acc(x.size());
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = a.apply(acc);
    if (!c[k].is_zero()) acc = add(acc, scale(c[k], x));
  }
  return acc;
}

void LinearSystem::add(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero()) {
      it = row.erase(it);
      continue;
    }
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    CycScalar f = it->second;
    for (const auto& [c, v] : piv->second) {
      CycScalar delta = f * v;
      auto slot = row.find(c);
      if (slot == row.end())
        row.emplace(c, -delta);
      else
        slot->second -= delta;
    }
    // Entries at columns <= col are settled; resume after col.
    it = row.upper_bound(col);
    row.erase(col);
  }
  if (row.empty()) return;
  CycScalar inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= inv;
  pivots_.emplace(row.begin()->first, std::move(row));
}

FieldMatrix LinearSystem::kernel() const {
  // Back-substitute to reduced form: pivot rows free of other pivot columns.
  std::map<std::size_t, Row> red = pivots_;
  for (auto it = red.rbegin(); it != red.rend(); ++it) {
    const std::size_t p = it->first;
    const Row& prow = it->second;
    for (auto& [q, qrow] : red) {
      if (q >= p) break;
      auto slot = qrow.find(p);
      if (slot == qrow.end()) continue;
      CycScalar f = slot->second;
      for (const auto& [c, v] : prow) {
        auto s2 = qrow.find(c);
        if (s2 == qrow.end())
          qrow.emplace(c, -(f * v));
        else
          s2->second -= f * v;
      }
      for (auto e = qrow.begin(); e != qrow.end();)
        e = e->second.is_zero() ? qrow.erase(e) : std::next(e);
    }
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n_; ++f) {
    if (red.count(f)) continue;
    Vec v(n_);
    v[f] = CycScalar(1);
    for (const auto& [p, prow] : red) {
      auto slot = prow.find(f);
      if (slot != prow.end()) v[p] = -slot->second;
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return FieldMatrix(0, n_);
  return FieldMatrix::from_rows(basis);
}

OrderResult matrix_order(const FieldMatrix& a, unsigned long bound) {
  require(a.is_square(), "order of non-square matrix");
  CycScalar d = det(a);
  if (d.is_zero()) throw Error(ErrorKind::SingularMatrix, "order of a singular matrix");
  OrderResult none;
  // Finite order forces an algebraic-integer characteristic polynomial and a
  // square-free minimal polynomial.
  if (d.is_rational() && d.rational_part() != 1 && d.rational_part() != -1) return none;
  CycPolynomial chi = char_poly(a);
  for (const auto& c : chi.coeffs())
    if (!c.is_integral()) return none;
  CycPolynomial g = CycPolynomial::gcd(chi, chi.derivative());
  CycPolynomial sq, rem;
  CycPolynomial::divmod(chi, g, sq, rem);
  if (!poly_eval(sq, a).is_zero()) return none;
  FieldMatrix p = a;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (p.is_identity()) return {OrderStatus::Finite, k};
    p = p * a;
  }
  return none;
}

}  // namespace liefix
