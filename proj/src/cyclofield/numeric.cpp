#include "liefix/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace liefix {

mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 64;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(unsigned digits) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rf";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) return "nan";
  std::string out(buf);
  mpfr_free_str(buf);
  // Avoid printing "-0.000".
  if (out.size() > 1 && out[0] == '-' &&
      out.find_first_not_of("-0.") == std::string::npos)
    out.erase(0, 1);
  return out;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real Complex::abs() const { return (re * re + im * im).sqrt(); }

std::string Complex::str(unsigned digits) const {
  std::string i = im.str(digits);
  if (!i.empty() && i[0] == '-') return re.str(digits) + " - " + i.substr(1) + "i";
  return re.str(digits) + " + " + i + "i";
}

Complex numeric_eval(const CycScalar& a, unsigned digits) {
  const mpfr_prec_t bits = bits_for_digits(std::max(digits, 1u));
  const unsigned m = a.conductor();
  Complex acc(bits);
  Real two_pi_over_m = Real::pi(bits) * Real(2, bits) / Real(static_cast<long>(m), bits);
  const auto& c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    Real coef(c[k], bits);
    if (k == 0) {
      acc.re = acc.re + coef;
      continue;
    }
    Real angle = two_pi_over_m * Real(static_cast<long>(k), bits);
    Real cs(bits), sn(bits);
    mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
    acc.re = acc.re + coef * cs;
    acc.im = acc.im + coef * sn;
  }
  return acc;
}

ComplexMatrix::ComplexMatrix(std::size_t size, mpfr_prec_t bits) : n(size) {
  a.reserve(size * size);
  for (std::size_t i = 0; i < size * size; ++i) a.emplace_back(bits);
}

ComplexMatrix ComplexMatrix::identity(std::size_t size, mpfr_prec_t bits) {
  ComplexMatrix m(size, bits);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i).re = Real(1, bits);
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  mpfr_prec_t bits = x.a.empty() ? 128 : x.a[0].re.precision();
  ComplexMatrix r(x.n, bits);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k)
      for (std::size_t j = 0; j < x.n; ++j) r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

ComplexMatrix ComplexMatrix::scaled(const Complex& s) const {
  ComplexMatrix r = *this;
  for (auto& v : r.a) v = v * s;
  return r;
}

Real ComplexMatrix::norm_inf() const {
  mpfr_prec_t bits = a.empty() ? 128 : a[0].re.precision();
  Real best(0, bits);
  for (std::size_t i = 0; i < n; ++i) {
    Real row(0, bits);
    for (std::size_t j = 0; j < n; ++j) row = row + at(i, j).abs();
    if (best < row) best = row;
  }
  return best;
}

Complex ComplexMatrix::det() const {
  mpfr_prec_t bits = a.empty() ? 128 : a[0].re.precision();
  ComplexMatrix w = *this;
  Complex d(Real(1, bits), Real(0, bits));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (w.at(best, c).abs() < w.at(r, c).abs()) best = r;
    if (mpfr_zero_p(w.at(best, c).re.get()) && mpfr_zero_p(w.at(best, c).im.get()))
      return Complex(bits);
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(best, j), w.at(c, j));
      d.re = -d.re;
      d.im = -d.im;
    }
    d = d * w.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Complex f = w.at(r, c) / w.at(c, c);
      for (std::size_t j = c; j < n; ++j) w.at(r, j) = w.at(r, j) - f * w.at(c, j);
    }
  }
  return d;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m, unsigned digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  // Scale so the norm is below 1/2, then square back.
  unsigned squarings = 0;
  Real norm = m.norm_inf();
  Real half(1, bits);
  half = half / Real(2, bits);
  ComplexMatrix x = m;
  while (half < norm) {
    norm = norm / Real(2, bits);
    ++squarings;
  }
  Complex scale(Real(1, bits), Real(0, bits));
  for (unsigned i = 0; i < squarings; ++i) scale.re = scale.re / Real(2, bits);
  x = x.scaled(scale);
  ComplexMatrix sum = ComplexMatrix::identity(m.n, bits);
  ComplexMatrix term = ComplexMatrix::identity(m.n, bits);
  // Terms shrink at least by 1/(2k); stop once below the target precision.
  Real tol(1, bits);
  mpfr_div_2si(tol.get(), tol.get(), static_cast<long>(bits), MPFR_RNDN);
  for (long k = 1; k < 10000; ++k) {
    term = (term * x).scaled(Complex(Real(1, bits) / Real(k, bits), Real(0, bits)));
    sum = sum + term;
    if (term.norm_inf() < tol) break;
  }
  for (unsigned i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace liefix
