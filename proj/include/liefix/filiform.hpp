#pragma once

#include <cstdint>
#include <vector>

#include "liefix/fpf.hpp"

namespace liefix {

bool is_filiform(const LieAlgebra& g);

struct FiliformPresentation {
  LieAlgebra algebra;
  /// Columns are the adapted basis vectors in the original coordinates.
  FieldMatrix change;
  /// The algebra rewritten in the adapted basis.
  LieAlgebra adapted;
  CycScalar alpha;
};

/// Throws NotFiliform or AdaptationFailed.
FiliformPresentation find_adapted_basis(const LieAlgebra& g, std::uint64_t seed = 0);

enum class GradedTag { L, Q };
struct GradedType {
  GradedTag tag = GradedTag::L;
  std::size_t n = 0;
};
GradedType graded_type(const FiliformPresentation& p);

struct GradedQDerivation {
  FieldMatrix derivation;          // original coordinates
  FieldMatrix adapted_derivation;  // adapted coordinates
  std::vector<CycScalar> betas;    // coefficients of e_4, e_6, ..., e_{n-2}
  bool isomorphic_to_q = false;
};
/// Throws PreconditionViolated unless gr(g) = Q_n and [g_2, g_2] lies in g_n.
GradedQDerivation graded_q_derivation(const FiliformPresentation& p);

/// Diagonal derivations d with d_k = d_i + d_j whenever [e_i, e_j] has an e_k part.
SolutionSpace diagonal_derivations(const LieAlgebra& g);

/// Throws NoNonsingularDerivation (CNLA input) or SamplingExhausted.
FieldMatrix nonsingular_derivation(const LieAlgebra& g, std::uint64_t seed = 0);

enum class WitnessMode { Exact, Numeric };
/// Exact mode throws NotDiagonalizableHere unless D has a rational spectrum
/// and is diagonalizable.
AutomorphismReport witness_from_derivation(const LieAlgebra& g, const FieldMatrix& d, WitnessMode mode,
                                           unsigned digits = 30, unsigned long order_bound = 1000);

struct FiliformOptions {
  std::uint64_t seed = 0;
  unsigned long order_bound = 1000;
  unsigned digits = 30;
};
/// Throws NotFiliform.
FpfDecision decide_fpf_filiform(const LieAlgebra& g, const FiliformOptions& opts = {});

/// Rational roots of a polynomial with rational coefficients, with multiplicity.
std::vector<Rational> rational_roots(const CycPolynomial& p);

}  // namespace liefix
