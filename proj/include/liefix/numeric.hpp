#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "liefix/cyclo.hpp"

namespace liefix {

/// Working precision in bits for a target of `digits` correct decimals.
mpfr_prec_t bits_for_digits(unsigned digits);

/// Owning wrapper around mpfr_t. Precision is fixed at construction; results of
/// arithmetic take the larger precision of the operands.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(long v, mpfr_prec_t bits);
  Real(const Rational& q, mpfr_prec_t bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  static Real pi(mpfr_prec_t bits);

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  Real abs() const;
  Real sqrt() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Fixed-point text with `digits` decimals after the point.
  std::string str(unsigned digits) const;

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  Real abs() const;
  std::string str(unsigned digits) const;
};

/// Value of a under the embedding zeta_M -> exp(2 pi i / M), accurate to 10^-digits.
Complex numeric_eval(const CycScalar& a, unsigned digits);

/// Dense complex matrix used only by the numeric witness path.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<Complex> a;  // row-major

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t size, mpfr_prec_t bits);
  static ComplexMatrix identity(std::size_t size, mpfr_prec_t bits);

  Complex& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
  friend ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
  friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
  ComplexMatrix scaled(const Complex& s) const;
  /// Max row sum of absolute values.
  Real norm_inf() const;
  /// Determinant by partial-pivot elimination.
  Complex det() const;
};

/// exp(m) by scaling and squaring with a Taylor kernel.
ComplexMatrix matrix_exp(const ComplexMatrix& m, unsigned digits);

}  // namespace liefix
