#include <sstream>

#include "liefix/cyclo.hpp"

namespace liefix {

CycPolynomial::CycPolynomial(std::vector<CycScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

CycPolynomial CycPolynomial::constant(const CycScalar& c) { return CycPolynomial({c}); }

CycPolynomial CycPolynomial::monomial(const CycScalar& c, std::size_t k) {
  std::vector<CycScalar> v(k + 1);
  v[k] = c;
  return CycPolynomial(std::move(v));
}

void CycPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycScalar CycPolynomial::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : CycScalar(); }

unsigned CycPolynomial::conductor() const {
  std::uint64_t m = 1;
  for (const auto& c : c_) m = lcm_u(m, c.conductor());
  return static_cast<unsigned>(m);
}

CycPolynomial CycPolynomial::monic() const {
  if (is_zero()) return *this;
  CycScalar inv = leading().inverse();
  CycPolynomial p = *this;
  for (auto& c : p.c_) c *= inv;
  return p;
}

CycPolynomial CycPolynomial::derivative() const {
  std::vector<CycScalar> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * CycScalar(static_cast<long>(k)));
  return CycPolynomial(std::move(d));
}

CycScalar CycPolynomial::eval(const CycScalar& x) const {
  CycScalar acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

CycPolynomial CycPolynomial::operator-() const {
  CycPolynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

CycPolynomial operator+(const CycPolynomial& a, const CycPolynomial& b) {
  std::vector<CycScalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return CycPolynomial(std::move(v));
}

CycPolynomial operator-(const CycPolynomial& a, const CycPolynomial& b) {
  std::vector<CycScalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return CycPolynomial(std::move(v));
}

CycPolynomial operator*(const CycPolynomial& a, const CycPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CycScalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycPolynomial(std::move(v));
}

CycPolynomial operator*(const CycScalar& s, const CycPolynomial& a) {
  if (s.is_zero()) return {};
  CycPolynomial p = a;
  for (auto& c : p.c_) c = s * c;
  return p;
}

bool operator==(const CycPolynomial& a, const CycPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

void CycPolynomial::divmod(const CycPolynomial& a, const CycPolynomial& b, CycPolynomial& q,
                           CycPolynomial& r) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<CycScalar> rem = a.c_;
  const std::size_t db = b.c_.size();
  std::vector<CycScalar> quot(rem.size() >= db ? rem.size() - db + 1 : 0);
  CycScalar lead_inv = b.leading().inverse();
  while (rem.size() >= db) {
    if (rem.back().is_zero()) {
      rem.pop_back();
      continue;
    }
    std::size_t shift = rem.size() - db;
    CycScalar c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t i = 0; i + 1 < db; ++i) {
      if (!b.c_[i].is_zero()) rem[shift + i] -= c * b.c_[i];
    }
    rem.pop_back();
  }
  q = CycPolynomial(std::move(quot));
  r = CycPolynomial(std::move(rem));
}

CycPolynomial CycPolynomial::gcd(const CycPolynomial& a, const CycPolynomial& b) {
  CycPolynomial x = a, y = b;
  while (!y.is_zero()) {
    CycPolynomial q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::string CycPolynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string coeff = c_[k].str();
    bool simple = c_[k].is_rational();
    if (k == 0) {
      out << (simple ? coeff : "(" + coeff + ")");
      continue;
    }
    if (!c_[k].is_one()) out << (simple ? coeff : "(" + coeff + ")") << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

CycPolynomial cyclotomic_polynomial(unsigned m) {
  std::vector<CycScalar> v;
  for (long c : cyclotomic_coefficients(m)) v.emplace_back(c);
  return CycPolynomial(std::move(v));
}

}  // namespace liefix
