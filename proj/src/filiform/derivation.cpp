#include <mpfr.h>

#include <algorithm>
#include <random>

#include "liefix/filiform.hpp"

namespace liefix {

namespace {

// Concatenated components of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] over i < j.
Vec leibniz_residual(const LieAlgebra& g, const FieldMatrix& d) {
  const std::size_t n = g.dim();
  Vec out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec r = d.apply(g.bracket_basis(i, j));
      r = sub(r, g.bracket(d.col(i), unit_vec(n, j)));
      r = sub(r, g.bracket(unit_vec(n, i), d.col(j)));
      out.insert(out.end(), r.begin(), r.end());
    }
  return out;
}

std::vector<mpz_class> divisors(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

bool rational_spectrum(const CycPolynomial& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

FieldMatrix diagonal(const std::vector<CycScalar>& d) {
  FieldMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool nonsingular_diagonal(const FieldMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (d.at(i, i).is_zero()) return false;
  return true;
}

// Eigenvalues of a diagonalizable matrix with rational spectrum, or nothing.
struct Eigenbasis {
  std::vector<Rational> values;  // one per column of vectors
  FieldMatrix vectors;
};

std::optional<Eigenbasis> rational_eigenbasis(const FieldMatrix& d) {
  const std::size_t n = d.rows();
  CycPolynomial chi = char_poly(d);
  if (!rational_spectrum(chi)) return std::nullopt;
  std::vector<Rational> roots = rational_roots(chi);
  if (roots.size() != n) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  Eigenbasis out;
  std::vector<Vec> cols;
  for (const auto& r : roots) {
    FieldMatrix k = kernel(d - CycScalar(r) * FieldMatrix::identity(n));
    for (std::size_t b = 0; b < k.rows(); ++b) {
      cols.push_back(k.row(b));
      out.values.push_back(r);
    }
  }
  if (cols.size() != n) return std::nullopt;
  out.vectors = FieldMatrix::from_columns(cols);
  return out;
}

Complex complex_exp(const Complex& z, mpfr_prec_t bits) {
  Real mag(bits), s(bits), c(bits);
  mpfr_exp(mag.get(), z.re.get(), MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return {mag * c, mag * s};
}

// All complex roots of a monic polynomial by Weierstrass iteration.
std::vector<Complex> complex_roots(const std::vector<Complex>& monic, mpfr_prec_t bits) {
  const std::size_t deg = monic.size() - 1;
  std::vector<Complex> z;
  Complex seed(Real(Rational(2, 5), bits), Real(Rational(9, 10), bits));
  Complex cur(Real(1, bits), Real(0, bits));
  for (std::size_t i = 0; i < deg; ++i) {
    z.push_back(cur);
    cur = cur * seed;
  }
  auto eval = [&](const Complex& x) {
    Complex acc = monic[deg];
    for (std::size_t k = deg; k-- > 0;) acc = acc * x + monic[k];
    return acc;
  };
  Real tol(1, bits);
  mpfr_div_2si(tol.get(), tol.get(), static_cast<long>(bits) - 8, MPFR_RNDN);
  for (int iter = 0; iter < 2000; ++iter) {
    Real moved(0, bits);
    for (std::size_t i = 0; i < deg; ++i) {
      Complex den(Real(1, bits), Real(0, bits));
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      if (den.abs() < tol) continue;
      Complex step = eval(z[i]) / den;
      z[i] = z[i] - step;
      Real a = step.abs();
      if (moved < a) moved = a;
    }
    if (moved < tol) break;
  }
  return z;
}

}  // namespace

std::vector<Rational> rational_roots(const CycPolynomial& p) {
  if (!rational_spectrum(p))
    throw Error(ErrorKind::PreconditionViolated, "polynomial has non-rational coefficients");
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.rational_part());
  std::vector<Rational> out;
  if (c.empty()) return out;
  // Zero roots first.
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  for (std::size_t i = 0; i < low; ++i) out.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  if (c.size() <= 1) return out;
  // Clear denominators to an integer polynomial.
  mpz_class den = 1;
  for (const auto& x : c) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(mpz_class(x * den));
  auto evaluate = [](const std::vector<mpz_class>& poly, const Rational& r) {
    Rational acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * r + Rational(poly[k]);
    return acc;
  };
  auto deflate = [](std::vector<mpz_class>& poly, const Rational& r) {
    // Divide by (q t - p) where r = p/q; exact for a root.
    std::vector<Rational> q(poly.size() - 1);
    Rational carry = 0;
    for (std::size_t k = poly.size(); k-- > 1;) {
      carry = Rational(poly[k]) + carry * r;
      q[k - 1] = carry;
    }
    mpz_class d = 1;
    for (auto& x : q) {
      x.canonicalize();
      d = lcm(d, mpz_class(x.get_den()));
    }
    std::vector<mpz_class> next;
    for (const auto& x : q) next.push_back(mpz_class(x * d));
    poly = std::move(next);
  };
  bool found = true;
  while (found && z.size() > 1) {
    found = false;
    for (const auto& a : divisors(z.front())) {
      for (const auto& b : divisors(z.back())) {
        for (int sign : {1, -1}) {
          Rational r(sign * a, b);
          r.canonicalize();
          if (evaluate(z, r) == 0) {
            out.push_back(r);
            deflate(z, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedQDerivation graded_q_derivation(const FiliformPresentation& p) {
  if (graded_type(p).tag != GradedTag::Q)
    throw Error(ErrorKind::PreconditionViolated, "associated graded algebra is not of type Q");
  const LieAlgebra& h = p.adapted;
  const std::size_t n = h.dim();
  // [g_2, g_2] inside span{e_n}: brackets among e_2..e_n only touch e_n.
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& b = h.bracket_basis(i, j);
      for (std::size_t k = 0; k + 1 < n; ++k)
        if (!b[k].is_zero())
          throw Error(ErrorKind::PreconditionViolated, "[g_2, g_2] is not inside the center");
    }

  FieldMatrix base(n, n);
  base.at(1, 0) = CycScalar(1);
  for (std::size_t i = 1; i + 1 < n; ++i) base.at(i, i) = CycScalar(1);
  base.at(n - 1, n - 1) = CycScalar(2);

  std::vector<std::size_t> rows;  // 0-based positions of e_4, e_6, ..., e_{n-2}
  for (std::size_t l = 4; l + 2 <= n; l += 2) rows.push_back(l - 1);

  // The residual is affine in the betas: solve residual(base) + sum b_l residual(E_l) = 0.
  Vec r0 = leibniz_residual(h, base);
  std::vector<CycScalar> betas(rows.size());
  if (!rows.empty()) {
    FieldMatrix a(r0.size(), rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) {
      FieldMatrix e(n, n);
      e.at(rows[c], 0) = CycScalar(1);
      Vec rc = leibniz_residual(h, e);
      for (std::size_t r = 0; r < rc.size(); ++r) a.at(r, c) = rc[r];
    }
    auto sol = solve(a, scale(CycScalar(-1), r0));
    if (!sol) throw Error(ErrorKind::PreconditionViolated, "no derivation of the expected shape");
    betas = *sol;
  } else if (!is_zero(r0)) {
    throw Error(ErrorKind::PreconditionViolated, "no derivation of the expected shape");
  }
  FieldMatrix d = base;
  for (std::size_t c = 0; c < rows.size(); ++c) d.at(rows[c], 0) = betas[c];
  if (!is_derivation(h, d))
    throw Error(ErrorKind::PreconditionViolated, "derivation check failed");

  GradedQDerivation out;
  out.adapted_derivation = d;
  out.derivation = p.change * d * inverse(p.change);
  out.betas = std::move(betas);
  out.isomorphic_to_q = true;
  return out;
}

SolutionSpace diagonal_derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknowns in reversed order so the free ones are the leading coordinates.
  auto var = [n](std::size_t k) { return n - 1 - k; };
  LinearSystem sys(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec& b = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (b[k].is_zero()) continue;
        LinearSystem::Row row;
        row[var(k)] += CycScalar(1);
        row[var(i)] -= CycScalar(1);
        row[var(j)] -= CycScalar(1);
        for (auto it = row.begin(); it != row.end();)
          it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (!row.empty()) sys.add(std::move(row));
      }
    }
  SolutionSpace out{n, n, {}};
  FieldMatrix k = sys.kernel();
  for (std::size_t b = 0; b < k.rows(); ++b) {
    std::vector<CycScalar> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = k.at(b, var(i));
    out.basis.push_back(diagonal(d));
  }
  return out;
}

FieldMatrix nonsingular_derivation(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  CnlaResult cn = is_cnla(g, seed);
  if (cn.cnla) throw Error(ErrorKind::NoNonsingularDerivation, "algebra is characteristically nilpotent");
  std::mt19937_64 rng(seed);
  auto small = [&]() { return CycScalar(static_cast<long>(rng() % 7) - 3); };

  // Diagonal derivations, in the given basis and then in an adapted one.
  auto try_diagonal = [&](const LieAlgebra& h) -> std::optional<FieldMatrix> {
    SolutionSpace s = diagonal_derivations(h);
    if (s.basis.empty()) return std::nullopt;
    FieldMatrix sum(n, n);
    for (const auto& b : s.basis) sum = sum + b;
    if (nonsingular_diagonal(sum)) return sum;
    for (int attempt = 0; attempt < 32; ++attempt) {
      FieldMatrix d(n, n);
      for (const auto& b : s.basis) d = d + small() * b;
      if (nonsingular_diagonal(d)) return d;
    }
    return std::nullopt;
  };
  if (auto d = try_diagonal(g)) return *d;
  if (is_filiform(g)) {
    try {
      FiliformPresentation p = find_adapted_basis(g, seed);
      if (auto d = try_diagonal(p.adapted)) {
        FieldMatrix back = p.change * *d * inverse(p.change);
        if (is_derivation(g, back)) return back;
      }
    } catch (const Error&) {
    }
  }

  const auto& basis = cn.derivations.basis;
  auto sample = [&]() {
    FieldMatrix d(n, n);
    for (const auto& b : basis) d = d + small() * b;
    return d;
  };
  // Semisimple parts of derivations are derivations; prefer a rational spectrum.
  for (int attempt = 0; attempt < 32; ++attempt) {
    FieldMatrix s = semisimple_part(sample());
    if (det(s).is_zero()) continue;
    if (rational_eigenbasis(s) && is_derivation(g, s)) return s;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    FieldMatrix d = sample();
    if (!det(d).is_zero()) return d;
  }
  throw Error(ErrorKind::SamplingExhausted, "no nonsingular derivation sampled");
}

AutomorphismReport witness_from_derivation(const LieAlgebra& g, const FieldMatrix& d, WitnessMode mode,
                                           unsigned digits, unsigned long order_bound) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "derivation size does not match the algebra");
  if (!is_derivation(g, d)) throw Error(ErrorKind::PreconditionViolated, "map is not a derivation");
  if (det(d).is_zero()) throw Error(ErrorKind::PreconditionViolated, "derivation is singular");

  if (mode == WitnessMode::Exact) {
    auto eig = rational_eigenbasis(d);
    if (!eig) throw Error(ErrorKind::NotDiagonalizableHere, "derivation has no rational eigenbasis");
    // Integer weights w, then phi = 2^w on each weight space.
    mpz_class den = 1;
    for (const auto& v : eig->values) den = lcm(den, mpz_class(v.get_den()));
    std::vector<CycScalar> scales;
    for (const auto& v : eig->values) {
      mpz_class w = mpz_class(v * den);
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, mpz_class(abs(w)).get_ui());
      scales.push_back(w < 0 ? CycScalar(Rational(1, p)) : CycScalar(Rational(p)));
    }
    FieldMatrix phi = eig->vectors * diagonal(scales) * inverse(eig->vectors);
    return check_automorphism(g, phi, order_bound);
  }

  const mpfr_prec_t bits = bits_for_digits(digits);
  ComplexMatrix dn(n, bits);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) dn.at(r, c) = numeric_eval(d.at(r, c), digits);
  CycPolynomial chi = char_poly(d);
  std::vector<Complex> coeffs;
  for (const auto& c : chi.coeffs()) coeffs.push_back(numeric_eval(c, digits));
  std::vector<Complex> lambdas = complex_roots(coeffs, bits);

  Real tol(1, bits);
  mpfr_div_2si(tol.get(), tol.get(), static_cast<long>(bits) / 2, MPFR_RNDN);
  for (long q = 1; q <= 16; ++q) {
    Real r = Real(1, bits) / Real(q, bits);
    Complex rc(r, Real(0, bits));
    Real gap(0, bits);
    bool first = true;
    for (const auto& l : lambdas) {
      Complex e = complex_exp(rc * l, bits) - Complex(Real(1, bits), Real(0, bits));
      Real a = e.abs();
      if (first || a < gap) gap = a;
      first = false;
    }
    if (gap < tol) continue;
    ComplexMatrix m = matrix_exp(dn.scaled(rc), digits);
    // max |phi[e_i,e_j] - [phi e_i, phi e_j]| over all components
    Real residual(0, bits);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Complex lhs(bits), rhs(bits);
          const Vec& b = g.bracket_basis(i, j);
          for (std::size_t s = 0; s < n; ++s)
            if (!b[s].is_zero()) lhs = lhs + m.at(k, s) * numeric_eval(b[s], digits);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
              const CycScalar& coef = g.bracket_basis(a, c)[k];
              if (coef.is_zero()) continue;
              rhs = rhs + m.at(a, i) * m.at(c, j) * numeric_eval(coef, digits);
            }
          Real diff = (lhs - rhs).abs();
          if (residual < diff) residual = diff;
        }
    ComplexMatrix shifted = m - ComplexMatrix::identity(n, bits);
    Real detgap = shifted.det().abs();

    AutomorphismReport rep;
    rep.is_morphism = residual < tol;
    rep.is_fpf = tol < detgap;
    rep.order = {OrderStatus::ExceedsBound, 0};
    NumericWitness w;
    w.digits = digits;
    w.map = std::move(m);
    w.scale = "1/" + std::to_string(q);
    w.morphism_residual = residual.str(digits);
    w.min_eigen_gap = gap.str(digits);
    w.det_phi_minus_id_abs = detgap.str(digits);
    rep.numeric = std::move(w);
    return rep;
  }
  throw Error(ErrorKind::PreconditionViolated, "no scale keeps exp(rD) away from 1");
}

}  // namespace liefix
