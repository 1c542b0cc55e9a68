#include "liefix/decompose.hpp"

namespace liefix {

PolyMatrix PolyMatrix::characteristic(const FieldMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "tI - A needs a square A");
  const std::size_t n = a.rows();
  PolyMatrix p(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<CycScalar> coeffs{-a.at(r, c)};
      if (r == c) coeffs.push_back(CycScalar(1));
      p.at(r, c) = CycPolynomial(std::move(coeffs));
    }
  return p;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(PolyMatrix p, bool track) : p_(std::move(p)), n_(p_.size()), track_(track) {
    if (track_) {
      uinv_ = PolyMatrix(n_);
      for (std::size_t i = 0; i < n_; ++i) uinv_.at(i, i) = CycPolynomial::constant(CycScalar(1));
    }
  }

  SmithResult run() {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!settle(k)) break;
      const CycScalar lead = p_.at(k, k).leading();
      if (!lead.is_one()) scale_row(k, lead.inverse());
    }
    SmithResult out;
    for (std::size_t k = 0; k < n_; ++k) out.diagonal.push_back(p_.at(k, k));
    if (track_) out.left_inverse = std::move(uinv_);
    return out;
  }

 private:
  // Brings a gcd-like pivot to (k,k) and clears its row and column. Returns
  // false when the remaining block is zero.
  bool settle(std::size_t k) {
    for (;;) {
      std::size_t br = n_, bc = n_;
      long best = -1;
      for (std::size_t r = k; r < n_; ++r)
        for (std::size_t c = k; c < n_; ++c) {
          const auto& e = p_.at(r, c);
          if (e.is_zero()) continue;
          if (best < 0 || e.degree() < best) {
            best = e.degree();
            br = r;
            bc = c;
          }
        }
      if (best < 0) return false;
      if (br != k) swap_rows(br, k);
      if (bc != k) swap_cols(bc, k);

      bool clean = true;
      for (std::size_t r = k + 1; r < n_; ++r) {
        if (p_.at(r, k).is_zero()) continue;
        CycPolynomial q, rem;
        CycPolynomial::divmod(p_.at(r, k), p_.at(k, k), q, rem);
        row_axpy(r, k, q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = k + 1; c < n_; ++c) {
        if (p_.at(k, c).is_zero()) continue;
        CycPolynomial q, rem;
        CycPolynomial::divmod(p_.at(k, c), p_.at(k, k), q, rem);
        col_axpy(c, k, q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t r = k + 1; r < n_ && divides; ++r)
        for (std::size_t c = k + 1; c < n_; ++c) {
          if (p_.at(r, c).is_zero()) continue;
          CycPolynomial q, rem;
          CycPolynomial::divmod(p_.at(r, c), p_.at(k, k), q, rem);
          if (!rem.is_zero()) {
            row_add(k, r);
            divides = false;
            break;
          }
        }
      if (divides) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n_; ++c) std::swap(p_.at(a, c), p_.at(b, c));
    if (track_)
      for (std::size_t r = 0; r < n_; ++r) std::swap(uinv_.at(r, a), uinv_.at(r, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n_; ++r) std::swap(p_.at(r, a), p_.at(r, b));
  }

  // row_dst -= q * row_src
  void row_axpy(std::size_t dst, std::size_t src, const CycPolynomial& q) {
    for (std::size_t c = 0; c < n_; ++c)
      if (!p_.at(src, c).is_zero()) p_.at(dst, c) = p_.at(dst, c) - q * p_.at(src, c);
    // Inverse op on U^{-1}: col_src += q * col_dst.
    if (track_)
      for (std::size_t r = 0; r < n_; ++r)
        if (!uinv_.at(r, dst).is_zero()) uinv_.at(r, src) = uinv_.at(r, src) + q * uinv_.at(r, dst);
  }

  // col_dst -= q * col_src
  void col_axpy(std::size_t dst, std::size_t src, const CycPolynomial& q) {
    for (std::size_t r = 0; r < n_; ++r)
      if (!p_.at(r, src).is_zero()) p_.at(r, dst) = p_.at(r, dst) - q * p_.at(r, src);
  }

  // row_dst += row_src
  void row_add(std::size_t dst, std::size_t src) {
    for (std::size_t c = 0; c < n_; ++c) p_.at(dst, c) = p_.at(dst, c) + p_.at(src, c);
    if (track_)
      for (std::size_t r = 0; r < n_; ++r) uinv_.at(r, src) = uinv_.at(r, src) - uinv_.at(r, dst);
  }

  void scale_row(std::size_t k, const CycScalar& s) {
    for (std::size_t c = 0; c < n_; ++c) p_.at(k, c) = s * p_.at(k, c);
    if (track_) {
      CycScalar inv = s.inverse();
      for (std::size_t r = 0; r < n_; ++r) uinv_.at(r, k) = inv * uinv_.at(r, k);
    }
  }

  PolyMatrix p_;
  std::size_t n_;
  bool track_;
  PolyMatrix uinv_;
};

}  // namespace

SmithResult smith_form(PolyMatrix p, bool track_left) {
  return SmithReducer(std::move(p), track_left).run();
}

std::vector<CycPolynomial> invariant_factors(const FieldMatrix& a) {
  SmithResult s = smith_form(PolyMatrix::characteristic(a));
  std::vector<CycPolynomial> out;
  for (auto& d : s.diagonal)
    if (d.degree() >= 1) out.push_back(std::move(d));
  return out;
}

SimilarityResult are_similar(const FieldMatrix& a, const FieldMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "are_similar needs square matrices of equal size");
  SimilarityResult out;
  out.factors_a = invariant_factors(a);
  out.factors_b = invariant_factors(b);
  out.similar = out.factors_a == out.factors_b;
  return out;
}

std::vector<CyclicPiece> cyclic_decomposition(const FieldMatrix& a) {
  const std::size_t n = a.rows();
  SmithResult s = smith_form(PolyMatrix::characteristic(a), true);
  std::vector<CyclicPiece> pieces;
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    const CycPolynomial& d = s.diagonal[i];
    if (d.degree() < 1) continue;
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j) {
      const CycPolynomial& pj = s.left_inverse.at(j, i);
      if (pj.is_zero()) continue;
      w = add(w, poly_apply(pj, a, unit_vec(n, j)));
    }
    if (!is_zero(poly_apply(d, a, w)))
      throw Error(ErrorKind::PreconditionViolated, "cyclic generator not annihilated");
    Vec v = w;
    for (long r = 0; r < d.degree(); ++r) {
      basis.push_back(v);
      v = a.apply(v);
    }
    pieces.push_back({std::move(w), d});
  }
  if (basis.size() != n || rank(FieldMatrix::from_rows(basis)) != n)
    throw Error(ErrorKind::PreconditionViolated, "cyclic decomposition does not span");
  return pieces;
}

}  // namespace liefix
