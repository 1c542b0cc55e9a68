#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liefix/decompose.hpp"
#include "liefix/numeric.hpp"

namespace liefix {

/// Subspace of K^n stored as the rows of its reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace span(const FieldMatrix& rows);
  static Subspace whole(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == n_; }
  const FieldMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Standard basis indices outside the pivots; those e_j span a complement.
  std::vector<std::size_t> complement_indices() const;

  /// v minus its component along the basis rows; zero on pivot positions.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_ = 0;
  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Structure constants on a fixed basis e_1..e_n (0-based internally).
class LieAlgebra {
 public:
  /// Keys (i, j) with i < j; value is the coordinate vector of [e_i, e_j].
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  LieAlgebra() = default;
  /// Checks dimensions and the Jacobi identity on all triples i<j<k.
  /// Throws DimensionMismatch or JacobiViolation.
  static LieAlgebra validate(std::size_t dim, const BracketTable& brackets, std::string name = {},
                             unsigned conductor = 0);
  static LieAlgebra abelian(std::size_t dim, std::string name = {});

  std::size_t dim() const { return n_; }
  unsigned conductor() const { return conductor_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  /// Nonzero brackets with i < j.
  BracketTable brackets() const;

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  bool is_abelian() const;

  /// Same algebra in the basis whose vectors are the columns of `change`.
  LieAlgebra change_basis(const FieldMatrix& change) const;

 private:
  std::size_t n_ = 0;
  unsigned conductor_ = 1;
  std::string name_;
  std::vector<Vec> table_;  // n*n entries, antisymmetric
};

/// Matrix of y -> [x, y]; column j is [x, e_j].
FieldMatrix adjoint(const LieAlgebra& g, const Vec& x);
Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v);

enum class SeriesKind { Derived, LowerCentral, UpperCentral };
struct SubspaceChain {
  SeriesKind kind;
  std::vector<Subspace> links;
};
SubspaceChain series(const LieAlgebra& g, SeriesKind kind);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// {x : [x, u] = 0 for all u in U}.
Subspace centralizer(const LieAlgebra& g, const Subspace& u);
Subspace center(const LieAlgebra& g);
bool is_ideal(const LieAlgebra& g, const Subspace& u);

/// g/I on the complement spanned by the standard vectors outside the pivots
/// of I. projection is q x n, lift is n x q.
struct Quotient {
  LieAlgebra algebra;
  Subspace ideal;
  std::vector<std::size_t> kept;
  FieldMatrix projection;
  FieldMatrix lift;
};
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// Largest nilpotent ideal. Throws NotSolvable.
Subspace nilradical(const LieAlgebra& g);

struct TraceEntry {
  std::size_t basis_index;  // 0-based
  std::size_t level;        // k >= 1: induced map on n^k / n^{k+1}
  CycScalar trace;
};
struct UnimodularityReport {
  bool unimodular = false;
  bool solvable = false;
  bool strongly_unimodular = false;
  std::vector<CycScalar> adjoint_traces;
  Subspace nilradical;
  std::vector<Subspace> nilradical_series;  // n^1, n^2, ..., ending in 0
  std::vector<TraceEntry> table;
};
UnimodularityReport unimodularity_report(const LieAlgebra& g);

/// Basis of all derivations (n x n matrices).
SolutionSpace derivation_algebra(const LieAlgebra& g);
bool is_derivation(const LieAlgebra& g, const FieldMatrix& d);

struct CnlaResult {
  bool cnla = false;
  SolutionSpace derivations;
  /// V_0 = g, V_{k+1} = Der(g) V_k; ends in 0 exactly when cnla.
  std::vector<Subspace> chain;
  std::optional<FieldMatrix> non_nilpotent;
};
CnlaResult is_cnla(const LieAlgebra& g, std::uint64_t seed = 0);

struct NumericWitness {
  unsigned digits = 0;
  ComplexMatrix map;
  std::string scale;  // r in exp(r D)
  std::string morphism_residual;
  std::string min_eigen_gap;  // min |exp(r w) - 1| over weights w
  std::string det_phi_minus_id_abs;
};

struct AutomorphismReport {
  FieldMatrix map;
  /// Bracket preserving and invertible.
  bool is_morphism = false;
  CycScalar det;
  CycScalar det_phi_minus_id;
  OrderResult order;
  bool is_fpf = false;
  std::optional<NumericWitness> numeric;
  bool certified() const { return is_morphism && is_fpf; }
};
AutomorphismReport check_automorphism(const LieAlgebra& g, const FieldMatrix& phi,
                                      unsigned long order_bound = 1000);
bool preserves_brackets(const LieAlgebra& g, const FieldMatrix& phi);

}  // namespace liefix
