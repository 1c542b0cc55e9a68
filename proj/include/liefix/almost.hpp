#pragma once

#include <cstdint>
#include <vector>

#include "liefix/fpf.hpp"

namespace liefix {

/// g = a ⋊ <v> with a abelian of codimension one.
struct AlmostAbelianPresentation {
  LieAlgebra algebra;
  Subspace ideal;
  FieldMatrix ideal_basis;  // rows, the basis the action is written in
  Vec v;
  FieldMatrix action;       // ad(v) on the ideal; column j is the image of row j
};

/// Throws NotAlmostAbelian (including for abelian input).
AlmostAbelianPresentation detect_presentation(const LieAlgebra& g);
/// Checks a supplied ideal and complement. Throws NotAlmostAbelian.
AlmostAbelianPresentation make_presentation(const LieAlgebra& g, const FieldMatrix& ideal_rows,
                                            const Vec& v);

struct CyclotomicCertificate {
  unsigned n = 0;
  /// Invariant factors of the invertible Fitting part B and of zeta_n B.
  std::vector<CycPolynomial> factors;
  std::vector<CycPolynomial> scaled_factors;
  /// Jordan block sizes of the nilpotent Fitting part.
  std::vector<std::size_t> nilpotent_blocks;
};
struct CyclotomicTest {
  bool holds = false;
  CyclotomicCertificate certificate;
};
CyclotomicTest is_n_cyclotomic(const FieldMatrix& a, unsigned n);

struct CyclotomicReport {
  std::size_t size = 0;
  std::vector<unsigned> admissible;
  std::vector<CyclotomicCertificate> certificates;  // one per admissible n
};
CyclotomicReport cyclotomic_report(const FieldMatrix& a);

/// Block companion matrix of t^n - C^n and the Vandermonde-type P with
/// companion * P = P * diag(C, zeta C, ..., zeta^{n-1} C).
struct VandermondeSimilarity {
  FieldMatrix companion;
  FieldMatrix p;
  FieldMatrix scaled_blocks;
};
/// Throws SingularInput or PreconditionViolated if the identity fails.
VandermondeSimilarity companion_similarity(const FieldMatrix& c, unsigned n);

struct AlmostAbelianOptions {
  std::uint64_t seed = 0;
  unsigned long order_bound = 1000;
  unsigned order_factor = 2;
};

FpfDecision decide_fpf(const LieAlgebra& g, const AlmostAbelianOptions& opts = {});

/// phi(v) = zeta_n v and, on the ideal, a map Phi with Phi A = zeta_n A Phi
/// scaled by mu = zeta_{kn}. k = 1 is accepted when the action is nilpotent
/// with all chains shorter than n. Throws PreconditionViolated when the
/// action is not n-cyclotomic or the result does not certify.
AutomorphismReport build_witness(const AlmostAbelianPresentation& p, unsigned n, unsigned k,
                                 std::uint64_t seed = 0, unsigned long order_bound = 1000);

}  // namespace liefix
