#include <cctype>
#include <sstream>

#include "field_data.hpp"

namespace liefix {

namespace {

using RPoly = std::vector<Rational>;

void rtrim(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a by b over Q; b nonzero and trimmed.
void rdivmod(RPoly a, const RPoly& b, RPoly& q, RPoly& r) {
  rtrim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    rtrim(a);
  }
  r = std::move(a);
}

RPoly rsub_mul(const RPoly& a, const RPoly& q, const RPoly& b) {
  // a - q*b
  RPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  rtrim(out);
  return out;
}

}  // namespace

CycScalar::CycScalar() : m_(1), c_{Rational(0)} {}
CycScalar::CycScalar(long v) : m_(1), c_{Rational(v)} {}
CycScalar::CycScalar(const Rational& q) : m_(1), c_{q} { c_[0].canonicalize(); }

CycScalar CycScalar::zeta(unsigned m, long k) {
  if (m == 0) throw Error(ErrorKind::Conductor, "conductor must be positive");
  long e = k % static_cast<long>(m);
  if (e < 0) e += m;
  std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[e] = 1;
  return from_poly(m, std::move(p));
}

CycScalar CycScalar::from_poly(unsigned m, std::vector<Rational> coeffs) {
  const auto& f = detail::field(m);
  for (auto& c : coeffs) c.canonicalize();
  if (coeffs.size() > m) {
    // z^m = 1 keeps the division short for long inputs.
    std::vector<Rational> folded(m, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % m] += coeffs[i];
    coeffs = std::move(folded);
  }
  detail::reduce_mod_phi(f, coeffs);
  CycScalar s;
  s.m_ = m;
  s.c_ = std::move(coeffs);
  return s;
}

bool CycScalar::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycScalar::is_one() const { return is_rational() && c_[0] == 1; }

bool CycScalar::is_integral() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

CycScalar CycScalar::lifted(unsigned target) const {
  if (target == m_) return *this;
  if (target == 0 || target % m_ != 0)
    throw Error(ErrorKind::Conductor, "cannot lift conductor " + std::to_string(m_) + " to " +
                                          std::to_string(target));
  if (is_rational()) {
    std::vector<Rational> p(detail::field(target).degree, Rational(0));
    p[0] = c_[0];
    CycScalar s;
    s.m_ = target;
    s.c_ = std::move(p);
    return s;
  }
  const unsigned step = target / m_;
  std::vector<Rational> p((c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
  return from_poly(target, std::move(p));
}

CycScalar CycScalar::normalized() const {
  if (m_ == 1) return *this;
  if (is_rational()) return CycScalar(c_[0]);
  for (unsigned d = 2; d < m_; ++d) {
    if (m_ % d != 0) continue;
    // Express the value in the basis zeta_d^k = z^(k*m/d), k < phi(d).
    const unsigned dd = detail::field(d).degree;
    const unsigned step = m_ / d;
    std::vector<std::vector<Rational>> cols;
    for (unsigned k = 0; k < dd; ++k) cols.push_back(zeta(m_, static_cast<long>(k * step)).c_);
    const std::size_t rows = c_.size();
    // Augmented system rows x (dd + 1).
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(dd + 1));
    for (std::size_t r = 0; r < rows; ++r) {
      for (unsigned k = 0; k < dd; ++k) a[r][k] = cols[k][r];
      a[r][dd] = c_[r];
    }
    std::size_t pr = 0;
    std::vector<std::size_t> piv;
    for (unsigned col = 0; col < dd && pr < rows; ++col) {
      std::size_t sel = pr;
      while (sel < rows && sgn(a[sel][col]) == 0) ++sel;
      if (sel == rows) continue;
      std::swap(a[sel], a[pr]);
      Rational inv = 1 / a[pr][col];
      for (auto& x : a[pr]) x *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == pr || sgn(a[r][col]) == 0) continue;
        Rational f = a[r][col];
        for (unsigned c = 0; c <= dd; ++c) a[r][c] -= f * a[pr][c];
      }
      piv.push_back(col);
      ++pr;
    }
    bool consistent = true;
    for (std::size_t r = pr; r < rows; ++r)
      if (sgn(a[r][dd]) != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> sol(dd, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = a[i][dd];
    return from_poly(d, std::move(sol));
  }
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    CycScalar s = *this;
    s.c_[0] = 1 / c_[0];
    return s;
  }
  const auto& f = detail::field(m_);
  RPoly phi(f.phi.begin(), f.phi.end());
  RPoly a = c_;
  rtrim(a);
  // Extended Euclid tracking the coefficient of a.
  RPoly r0 = phi, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    RPoly q, r;
    rdivmod(r0, r1, q, r);
    RPoly s2 = rsub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw Error(ErrorKind::DivisionByZero, "non-invertible residue");
  }
  Rational inv = 1 / r1[0];
  for (auto& c : s1) c *= inv;
  return from_poly(m_, std::move(s1));
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(1);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycScalar CycScalar::operator-() const {
  CycScalar s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else if (o.m_ == 1) {
    c_[0] += o.c_[0];
  } else {
    unsigned l = static_cast<unsigned>(lcm_u(m_, o.m_));
    CycScalar a = lifted(l);
    CycScalar b = o.lifted(l);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else if (o.m_ == 1) {
    c_[0] -= o.c_[0];
  } else {
    unsigned l = static_cast<unsigned>(lcm_u(m_, o.m_));
    CycScalar a = lifted(l);
    CycScalar b = o.lifted(l);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    *this = std::move(a);
  }
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (b.m_ == 1 || b.is_rational()) {
    CycScalar s = a.m_ % b.m_ == 0 ? a : a.lifted(static_cast<unsigned>(lcm_u(a.m_, b.m_)));
    const Rational& k = b.c_[0];
    for (auto& c : s.c_) c *= k;
    return s;
  }
  if (a.m_ == 1 || a.is_rational()) return b * a;
  unsigned l = static_cast<unsigned>(lcm_u(a.m_, b.m_));
  const CycScalar& x = a.m_ == l ? a : a.lifted(l);
  CycScalar ytmp;
  const CycScalar* y = &b;
  if (b.m_ != l) {
    ytmp = b.lifted(l);
    y = &ytmp;
  }
  const std::size_t d = x.c_.size();
  std::vector<Rational> p(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y->c_[j]) == 0) continue;
      p[i + j] += x.c_[i] * y->c_[j];
    }
  }
  detail::reduce_mod_phi(detail::field(l), p);
  CycScalar s;
  s.m_ = l;
  s.c_ = std::move(p);
  return s;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  unsigned l = static_cast<unsigned>(lcm_u(a.m_, b.m_));
  return a.lifted(l).c_ == b.lifted(l).c_;
}

std::string CycScalar::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else if (k == 1 && mag == 1 && !(first && sgn(c) < 0)) {
      out << 'z';
    } else if (mag == 1 && !(first && sgn(c) < 0)) {
      out << "z^" << k;
    } else {
      out << mag.get_str() << "*z^" << k;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, unsigned m) : m_(m) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  CycScalar parse() {
    if (s_.empty()) fail("empty scalar");
    std::vector<Rational> acc(1, Rational(0));
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    term(acc, negate);
    while (pos_ < s_.size()) {
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      term(acc, op == '-');
    }
    return CycScalar::from_poly(m_, std::move(acc));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "scalar '" + s_ + "' at offset " + std::to_string(pos_) +
                                      ": " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  unsigned long natural() {
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return std::stoul(d);
  }

  void term(std::vector<Rational>& acc, bool negate) {
    Rational coeff(1);
    std::size_t power = 0;
    if (peek() == 'z') {
      power = zpart();
    } else {
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      mpz_class num(digits());
      mpz_class den(1);
      if (peek() == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      if (neg) coeff = -coeff;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'z') fail("expected 'z' after '*'");
        power = zpart();
      }
    }
    if (negate) coeff = -coeff;
    power %= m_;
    if (acc.size() <= power) acc.resize(power + 1, Rational(0));
    acc[power] += coeff;
  }

  std::size_t zpart() {
    ++pos_;  // 'z'
    if (m_ == 1) throw Error(ErrorKind::Conductor, "scalar '" + s_ + "' uses z with conductor 1");
    if (peek() == '^') {
      ++pos_;
      return natural();
    }
    return 1;
  }

  std::string s_;
  std::size_t pos_ = 0;
  unsigned m_;
};

}  // namespace

CycScalar parse_scalar(std::string_view text, unsigned m) {
  if (m == 0) throw Error(ErrorKind::Conductor, "conductor must be positive");
  return ScalarParser(text, m).parse();
}

}  // namespace liefix
