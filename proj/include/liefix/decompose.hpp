#pragma once

#include <cstdint>
#include <vector>

#include "liefix/matrix.hpp"

namespace liefix {

/// Square matrix with polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}
  /// t I - A.
  static PolyMatrix characteristic(const FieldMatrix& a);

  std::size_t size() const { return n_; }
  CycPolynomial& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const CycPolynomial& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

 private:
  std::size_t n_ = 0;
  std::vector<CycPolynomial> e_;
};

struct SmithResult {
  /// All n diagonal entries, monic, each dividing the next.
  std::vector<CycPolynomial> diagonal;
  /// U^{-1} when tracking was requested: P = U^{-1} S V^{-1}.
  PolyMatrix left_inverse;
};

SmithResult smith_form(PolyMatrix p, bool track_left = false);

/// Invariant factors of t I - A of positive degree, in divisibility order.
std::vector<CycPolynomial> invariant_factors(const FieldMatrix& a);

struct SimilarityResult {
  bool similar = false;
  std::vector<CycPolynomial> factors_a;
  std::vector<CycPolynomial> factors_b;
};

SimilarityResult are_similar(const FieldMatrix& a, const FieldMatrix& b);

struct CyclicPiece {
  Vec generator;
  CycPolynomial annihilator;  // monic, positive degree
};

/// Decomposition of the space into A-cyclic subspaces whose annihilators are
/// the invariant factors; the vectors A^r w_i (r < deg) form a basis.
std::vector<CyclicPiece> cyclic_decomposition(const FieldMatrix& a);

struct FittingSplit {
  FieldMatrix null_part;        // rows: basis of ker A^n
  FieldMatrix invertible_part;  // rows: basis of im A^n
};

FittingSplit fitting_split(const FieldMatrix& a);

/// Matrix of A restricted to an invariant subspace with basis rows.
FieldMatrix restrict_to(const FieldMatrix& a, const FieldMatrix& basis_rows);

/// Jordan chains v, Nv, ..., N^{len-1} v, longest first. Throws NotNilpotent.
std::vector<std::vector<Vec>> nilpotent_jordan_chains(const FieldMatrix& n);

struct SolutionSpace {
  std::size_t rows = 0, cols = 0;
  std::vector<FieldMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// All X with X A = B X.
SolutionSpace intertwiner_space(const FieldMatrix& a, const FieldMatrix& b);

struct Intertwiner {
  FieldMatrix x;
  SolutionSpace space;
};

/// Invertible X with X A = B X by seeded sampling. Throws NotSimilar or
/// SamplingExhausted.
Intertwiner find_intertwiner(const FieldMatrix& a, const FieldMatrix& b, std::uint64_t seed,
                             unsigned budget = 64);

/// Semisimple part of the additive Jordan decomposition, computed exactly by
/// Newton iteration on the square-free part of the characteristic polynomial.
FieldMatrix semisimple_part(const FieldMatrix& a);

/// Square-free part of a nonzero polynomial, monic.
CycPolynomial squarefree_part(const CycPolynomial& p);

}  // namespace liefix
