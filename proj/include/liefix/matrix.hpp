#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liefix/cyclo.hpp"

namespace liefix {

using Vec = std::vector<CycScalar>;

/// Dense row-major matrix over Q(zeta_M). Entries may carry different
/// conductors; arithmetic lifts to the lcm, and conductor() reports it.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols);
  static FieldMatrix identity(std::size_t n);
  static FieldMatrix from_rows(const std::vector<Vec>& rows);
  static FieldMatrix from_columns(const std::vector<Vec>& cols);
  static FieldMatrix diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  CycScalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const CycScalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;

  unsigned conductor() const;
  FieldMatrix lifted(unsigned m) const;

  bool is_zero() const;
  bool is_identity() const;

  FieldMatrix transpose() const;
  FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  CycScalar trace() const;
  Vec apply(const Vec& x) const;

  FieldMatrix operator-() const;
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const CycScalar& s, const FieldMatrix& a);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycScalar> e_;
};

/// Vector helpers.
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const CycScalar& s, const Vec& a);
bool is_zero(const Vec& v);

struct Rref {
  FieldMatrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const FieldMatrix& a);
std::size_t rank(const FieldMatrix& a);
/// Rows form a basis of {x : A x = 0}; zero rows when the kernel is trivial.
FieldMatrix kernel(const FieldMatrix& a);
CycScalar det(const FieldMatrix& a);
/// Throws SingularMatrix.
FieldMatrix inverse(const FieldMatrix& a);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const FieldMatrix& a, const Vec& b);
FieldMatrix power(const FieldMatrix& a, unsigned long k);
CycPolynomial char_poly(const FieldMatrix& a);
/// p(A) by Horner.
FieldMatrix poly_eval(const CycPolynomial& p, const FieldMatrix& a);
/// p(A) x without forming p(A).
Vec poly_apply(const CycPolynomial& p, const FieldMatrix& a, const Vec& x);

/// Homogeneous sparse linear system, reduced incrementally. Used for the large
/// structured systems (derivations, intertwiners, morphism conditions).
class LinearSystem {
 public:
  using Row = std::map<std::size_t, CycScalar>;

  explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}
  void add(Row row);
  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  /// Rows form a basis of the solution space, one row per free unknown.
  FieldMatrix kernel() const;

 private:
  std::size_t n_;
  std::map<std::size_t, Row> pivots_;
};

enum class OrderStatus { Finite, ExceedsBound };

struct OrderResult {
  OrderStatus status = OrderStatus::ExceedsBound;
  unsigned long order = 0;
};

/// Smallest k <= bound with A^k = I. Throws SingularMatrix.
OrderResult matrix_order(const FieldMatrix& a, unsigned long bound);

}  // namespace liefix
