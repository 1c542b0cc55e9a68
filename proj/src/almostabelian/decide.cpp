#include <algorithm>

#include "liefix/almost.hpp"

namespace liefix {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

Vec combine(const FieldMatrix& rows, const Vec& coords) {
  Vec out(rows.cols());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out = add(out, scale(coords[i], rows.row(i)));
  return out;
}

bool only_powers_of(const CycPolynomial& p, unsigned n) {
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    if (j % n != 0 && !p.coeffs()[j].is_zero()) return false;
  return true;
}

}  // namespace

AutomorphismReport build_witness(const AlmostAbelianPresentation& p, unsigned n, unsigned k,
                                 std::uint64_t /*seed*/, unsigned long order_bound) {
  if (n < 2 || k < 1) throw Error(ErrorKind::PreconditionViolated, "need n >= 2 and k >= 1");
  const FieldMatrix& a = p.action;
  const CycScalar zeta = CycScalar::zeta(n);
  const CycScalar mu = CycScalar::zeta(n * k);
  FittingSplit split = fitting_split(a);

  // New basis in ideal coordinates, with the eigenvalue of phi on each vector.
  std::vector<Vec> vectors;
  Vec eigen;
  if (split.invertible_part.rows() > 0) {
    FieldMatrix b = restrict_to(a, split.invertible_part);
    if (!is_n_cyclotomic(b, n).holds)
      throw Error(ErrorKind::PreconditionViolated, "invertible part is not n-cyclotomic");
    // On each cyclic piece the annihilator lies in K[t^n], so
    // B^r w -> mu zeta^r B^r w satisfies Phi B = zeta B Phi.
    for (const auto& piece : cyclic_decomposition(b)) {
      if (!only_powers_of(piece.annihilator, n))
        throw Error(ErrorKind::PreconditionViolated, "annihilator is not a polynomial in t^n");
      Vec w = piece.generator;
      for (long r = 0; r < piece.annihilator.degree(); ++r) {
        vectors.push_back(combine(split.invertible_part, w));
        eigen.push_back(mu * zeta.pow(r));
        w = b.apply(w);
      }
    }
  }
  if (split.null_part.rows() > 0) {
    FieldMatrix nil = restrict_to(a, split.null_part);
    for (const auto& chain : nilpotent_jordan_chains(nil))
      for (std::size_t i = 0; i < chain.size(); ++i) {
        vectors.push_back(combine(split.null_part, chain[i]));
        eigen.push_back(mu * zeta.pow(static_cast<long>(i)));
      }
  }
  std::vector<Vec> columns;
  for (const auto& x : vectors) columns.push_back(combine(p.ideal_basis, x));
  columns.push_back(p.v);
  eigen.push_back(zeta);

  FieldMatrix q = FieldMatrix::from_columns(columns);
  FieldMatrix phi = q * FieldMatrix::diagonal(eigen) * inverse(q);
  AutomorphismReport rep = check_automorphism(p.algebra, phi, order_bound);
  if (!rep.certified())
    throw Error(ErrorKind::PreconditionViolated, "constructed map is not a fixed-point-free automorphism");
  return rep;
}

FpfDecision decide_fpf(const LieAlgebra& g, const AlmostAbelianOptions& opts) {
  FpfDecision d;
  const std::size_t dim = g.dim();
  if (g.is_abelian()) {
    d.engine = "abelian";
    d.verdict = Verdict::Yes;
    d.reason_code = "abelian";
    d.reason = "abelian algebra; -1 times the identity";
    d.n = 2;
    d.witness = check_automorphism(g, -FieldMatrix::identity(dim), opts.order_bound);
    return d;
  }
  AlmostAbelianPresentation p = detect_presentation(g);
  d.engine = "almost_abelian";
  FittingSplit split = fitting_split(p.action);
  if (split.invertible_part.rows() == 0) {
    std::size_t longest = 0;
    for (const auto& chain : nilpotent_jordan_chains(p.action)) longest = std::max(longest, chain.size());
    unsigned n = static_cast<unsigned>(longest + 1);
    d.verdict = Verdict::Yes;
    d.reason_code = "nilpotent";
    d.reason = "nilpotent almost abelian algebra";
    d.n = n;
    d.witness = build_witness(p, n, 1, opts.seed, opts.order_bound);
    return d;
  }
  FieldMatrix b = restrict_to(p.action, split.invertible_part);
  CyclotomicReport rep = cyclotomic_report(b);
  if (rep.admissible.empty()) {
    d.verdict = Verdict::No;
    if (!p.action.trace().is_zero()) {
      d.reason_code = "not_strongly_unimodular";
      d.reason = "not strongly unimodular";
    } else {
      d.reason_code = "not_cyclotomic";
      d.reason = "invertible part of ad(v) on the abelian ideal is not n-cyclotomic for any n >= 2";
    }
    return d;
  }
  unsigned n = rep.admissible.front();
  d.verdict = Verdict::Yes;
  d.reason_code = "cyclotomic";
  d.reason = "invertible part of ad(v) on the abelian ideal is " + std::to_string(n) + "-cyclotomic";
  d.n = n;
  d.witness = build_witness(p, n, std::max(2u, opts.order_factor), opts.seed, opts.order_bound);
  return d;
}

}  // namespace liefix
