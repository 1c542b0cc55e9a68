#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liefix/errors.hpp"

namespace liefix {

using Rational = mpq_class;

/// Euler totient.
unsigned totient(unsigned m);

/// Integer coefficients of Phi_m, low degree first (length totient(m)+1).
const std::vector<long>& cyclotomic_coefficients(unsigned m);

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b);

/// Element of Q(zeta_m) stored as the reduced coefficient vector in the power
/// basis 1, z, ..., z^(phi(m)-1). Values are immutable once built.
class CycScalar {
 public:
  CycScalar();
  CycScalar(long v);  // NOLINT(google-explicit-constructor)
  CycScalar(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// zeta_m^k.
  static CycScalar zeta(unsigned m, long k = 1);
  /// Arbitrary-length coefficient vector in z, reduced modulo Phi_m.
  static CycScalar from_poly(unsigned m, std::vector<Rational> coeffs);

  unsigned conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }
  bool is_integral() const;

  /// Same value expressed over conductor target; target must be a multiple.
  CycScalar lifted(unsigned target) const;
  /// Smallest conductor dividing conductor() that still holds the value.
  CycScalar normalized() const;

  CycScalar inverse() const;
  CycScalar pow(long e) const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Text in the scalar grammar, with z read as zeta_conductor().
  std::string str() const;
  /// Text valid under an ambient conductor that is a multiple of conductor().
  std::string str(unsigned ambient) const { return lifted(ambient).str(); }

 private:
  unsigned m_ = 1;
  std::vector<Rational> c_;
};

/// Parses the scalar grammar; z denotes zeta_m.
CycScalar parse_scalar(std::string_view text, unsigned m);

/// Polynomial in t with CycScalar coefficients, low degree first, trimmed.
class CycPolynomial {
 public:
  CycPolynomial() = default;
  explicit CycPolynomial(std::vector<CycScalar> coeffs);
  static CycPolynomial constant(const CycScalar& c);
  /// c * t^k
  static CycPolynomial monomial(const CycScalar& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<CycScalar>& coeffs() const { return c_; }
  CycScalar coeff(std::size_t k) const;
  const CycScalar& leading() const { return c_.back(); }
  unsigned conductor() const;

  CycPolynomial monic() const;
  CycPolynomial derivative() const;
  CycScalar eval(const CycScalar& x) const;

  CycPolynomial operator-() const;
  friend CycPolynomial operator+(const CycPolynomial& a, const CycPolynomial& b);
  friend CycPolynomial operator-(const CycPolynomial& a, const CycPolynomial& b);
  friend CycPolynomial operator*(const CycPolynomial& a, const CycPolynomial& b);
  friend CycPolynomial operator*(const CycScalar& s, const CycPolynomial& a);
  friend bool operator==(const CycPolynomial& a, const CycPolynomial& b);
  friend bool operator!=(const CycPolynomial& a, const CycPolynomial& b) { return !(a == b); }

  /// Quotient and remainder; throws DivisionByZero for b = 0.
  static void divmod(const CycPolynomial& a, const CycPolynomial& b, CycPolynomial& q,
                     CycPolynomial& r);
  /// Monic gcd (zero if both are zero).
  static CycPolynomial gcd(const CycPolynomial& a, const CycPolynomial& b);

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<CycScalar> c_;
};

/// Phi_m as a polynomial with rational coefficients.
CycPolynomial cyclotomic_polynomial(unsigned m);

}  // namespace liefix
