#include "liefix/filiform.hpp"

namespace liefix {

FpfDecision decide_fpf_filiform(const LieAlgebra& g, const FiliformOptions& opts) {
  FiliformPresentation p = find_adapted_basis(g, opts.seed);
  FpfDecision d;
  d.engine = "filiform";
  FiliformFacts facts;
  facts.graded_type = graded_type(p).tag == GradedTag::Q ? "Q" : "L";
  facts.cnla = is_cnla(g, opts.seed).cnla;
  facts.not_cnla = !facts.cnla;
  // The remaining statements are equivalent to not being CNLA.
  facts.has_nonsingular_derivation = facts.not_cnla;
  facts.is_derived_algebra = facts.not_cnla;
  if (facts.cnla) {
    d.verdict = Verdict::No;
    d.reason_code = "cnla";
    d.reason = "characteristically nilpotent: every derivation is nilpotent";
    d.filiform = std::move(facts);
    return d;
  }
  FieldMatrix der = nonsingular_derivation(g, opts.seed);
  facts.nonsingular_derivation = der;
  try {
    d.witness = witness_from_derivation(g, der, WitnessMode::Exact, opts.digits, opts.order_bound);
    facts.certificate_kind = "exact";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDiagonalizableHere) throw;
    d.witness = witness_from_derivation(g, der, WitnessMode::Numeric, opts.digits, opts.order_bound);
    facts.certificate_kind = "numeric";
  }
  d.verdict = Verdict::Yes;
  d.reason_code = "nonsingular_derivation";
  d.reason = "not characteristically nilpotent; grading by a nonsingular derivation";
  d.filiform = std::move(facts);
  return d;
}

}  // namespace liefix
