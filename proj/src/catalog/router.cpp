#include "liefix/catalog.hpp"

namespace liefix {

std::optional<Dim4Match> match_dim4_catalog(const LieAlgebra& g) {
  if (g.dim() != 4 || !is_solvable(g) || is_nilpotent(g)) return std::nullopt;
  Subspace nil = nilradical(g);
  if (nil.dim() != 3) return std::nullopt;
  Subspace center = subspace_bracket(g, nil, nil);
  if (center.dim() != 1 || !subspace_bracket(g, nil, center).is_zero()) return std::nullopt;

  const Vec x = unit_vec(4, nil.complement_indices().front());
  for (std::size_t i = 0; i < nil.dim(); ++i) {
    Vec u = nil.basis().row(i);
    if (center.contains(u)) continue;
    Vec w = g.bracket(x, u);
    Vec z = g.bracket(u, w);
    if (is_zero(z)) continue;
    FieldMatrix p = FieldMatrix::from_columns({x, u, w, z});
    if (det(p).is_zero()) continue;
    LieAlgebra h = g.change_basis(p);
    // Normal form: [x,u] = w, [x,w] = c u + d z, [x,z] = 0, [u,w] = z.
    const Vec& xw = h.bracket_basis(0, 2);
    CycScalar c = xw[1], d = xw[3];
    Vec expect_xw(4);
    expect_xw[1] = c;
    expect_xw[3] = d;
    bool ok = h.bracket_basis(0, 1) == unit_vec(4, 2) && xw == expect_xw && is_zero(h.bracket_basis(0, 3)) &&
              h.bracket_basis(1, 2) == unit_vec(4, 3) && is_zero(h.bracket_basis(1, 3)) &&
              is_zero(h.bracket_basis(2, 3)) && !c.is_zero();
    if (!ok) return std::nullopt;
    return Dim4Match{"g10(-1)", p, c, d};
  }
  return std::nullopt;
}

AutomorphismReport dim4_witness(const LieAlgebra& g, const Dim4Match& m, unsigned long order_bound) {
  // x -> -x, u -> mu u + s z, w -> -mu w, z -> -mu^2 z. The map u -> u,
  // w -> -w anticommutes with ad(x) on N/Z; s fixes the center part of [x,w].
  const CycScalar mu = CycScalar::zeta(3);
  const CycScalar s = m.d * (mu + mu * mu) / m.c;
  FieldMatrix local(4, 4);
  local.at(0, 0) = CycScalar(-1);
  local.at(1, 1) = mu;
  local.at(3, 1) = s;
  local.at(2, 2) = -mu;
  local.at(3, 3) = -(mu * mu);
  return check_automorphism(g, m.basis * local * inverse(m.basis), order_bound);
}

FpfDecision route_fpf(const LieAlgebra& g, const RouterOptions& opts) {
  AlmostAbelianOptions aa;
  aa.seed = opts.seed;
  aa.order_bound = opts.order_bound;
  if (g.is_abelian()) return decide_fpf(g, aa);
  try {
    detect_presentation(g);
    return decide_fpf(g, aa);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAlmostAbelian) throw;
  }
  if (is_filiform(g)) {
    FiliformOptions fo;
    fo.seed = opts.seed;
    fo.order_bound = opts.order_bound;
    fo.digits = opts.digits;
    return decide_fpf_filiform(g, fo);
  }

  FpfDecision d;
  d.engine = "necessary_condition";
  if (!is_solvable(g)) {
    d.verdict = Verdict::No;
    d.reason_code = "not_solvable";
    d.reason = "not solvable";
    return d;
  }
  if (!unimodularity_report(g).strongly_unimodular) {
    d.verdict = Verdict::No;
    d.reason_code = "not_strongly_unimodular";
    d.reason = "not strongly unimodular";
    return d;
  }
  if (g.dim() <= 4) {
    if (auto m = match_dim4_catalog(g)) {
      AutomorphismReport rep = dim4_witness(g, *m, opts.order_bound);
      if (rep.certified()) {
        d.engine = "catalog";
        d.verdict = Verdict::Yes;
        d.reason_code = "catalog_match";
        d.reason = "matches the catalog class " + m->entry;
        d.witness = std::move(rep);
        return d;
      }
    }
  }
  d.engine = "none";
  d.verdict = Verdict::Unknown;
  d.reason_code = "unsupported_class";
  d.reason = "strongly unimodular, but not abelian, almost abelian, filiform, or a matched catalog algebra";
  return d;
}

}  // namespace liefix
