#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liefix/almost.hpp"
#include "liefix/filiform.hpp"

namespace liefix {

struct CatalogParam {
  std::string name;
  CycScalar value;
};

/// Expected properties, already evaluated at the entry's parameters. The
/// rule strings describe the conditional ones.
struct Expected {
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  bool strongly_unimodular = false;
  bool fpf_exists = false;
  std::string strongly_unimodular_rule;  // empty when unconditional
  std::string fpf_rule;
};

struct CatalogEntry {
  std::string name;  // family name as accepted by get_algebra
  std::vector<CatalogParam> params;
  LieAlgebra algebra;
  Expected expected;
  /// Named automorphism families acting on this algebra (see family_automorphism).
  std::vector<std::string> families;

  /// name(p1,p2,...) with the parameters in scalar syntax.
  std::string label() const;
};

/// Names: C^n (or Cn), r2, n3, r2+C, r3, r3lam, sl2, g1..g10, ex210, Ln, Qn.
/// Throws UnknownName or BadParameters.
CatalogEntry get_algebra(const std::string& name, const std::vector<CycScalar>& params = {});
std::vector<std::string> catalog_names();
/// Number of parameters each name takes.
std::size_t catalog_arity(const std::string& name);

/// Every entry on the fixed sampling grids, optionally restricted to one dimension.
std::vector<CatalogEntry> catalog_samples(std::optional<std::size_t> dim = std::nullopt);

/// Named isomorphic presentation, if the entry has one (g9(-1,0) is r3lam(-1) + C).
std::optional<CatalogEntry> catalog_alias(const CatalogEntry& e);
/// g + C^k with the new basis vectors central and last.
LieAlgebra direct_sum_abelian(const LieAlgebra& g, std::size_t k, std::string name = {});

/// Families: abelian(dim, n), n3(n), r3m1(m), n4(s, t), g9w(m), g10m1(m).
/// Throws UnknownName or BadParameters.
FieldMatrix family_automorphism(const std::string& family, const std::vector<CycScalar>& params);
/// Catalog entry the family acts on.
CatalogEntry family_host(const std::string& family, const std::vector<CycScalar>& params);

struct IsoPredicateResult {
  bool related = false;
  std::string clause;  // which clause matched; empty when unrelated
};
/// name in {g9, g10, r3lam}. Throws UnknownName or BadParameters.
IsoPredicateResult iso_predicate(const std::string& name, const std::vector<CycScalar>& a,
                                 const std::vector<CycScalar>& b);

struct RouterOptions {
  std::uint64_t seed = 0;
  unsigned long order_bound = 1000;
  unsigned digits = 30;
};
/// abelian -> almost abelian -> filiform -> necessary conditions -> dim <= 4
/// catalog match -> Unknown.
FpfDecision route_fpf(const LieAlgebra& g, const RouterOptions& opts = {});

/// Recognition of the g10(-1) class: Heisenberg nilradical N with ad(x)
/// traceless and invertible on N/Z. basis columns are x, u, w = [x,u],
/// z = [u,w], where [x,w] = c u + d z.
struct Dim4Match {
  std::string entry;  // catalog label of the matched class
  FieldMatrix basis;
  CycScalar c;
  CycScalar d;
};
std::optional<Dim4Match> match_dim4_catalog(const LieAlgebra& g);
/// Fixed-point-free automorphism of order 6 built on a match.
AutomorphismReport dim4_witness(const LieAlgebra& g, const Dim4Match& m, unsigned long order_bound = 1000);

struct EntryCheck {
  std::string label;
  std::size_t dim = 0;
  Expected expected;
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  bool strongly_unimodular = false;
  Verdict fpf = Verdict::Unknown;
  std::string engine;
  std::optional<unsigned long> witness_order;
  std::vector<std::string> diffs;
  bool pass() const { return diffs.empty(); }
};

struct FamilyCheck {
  std::string family;
  std::vector<CycScalar> params;
  std::string host;
  bool is_morphism = false;
  bool is_fpf = false;
  std::optional<unsigned long> order;
  bool expect_fpf = true;
  std::optional<unsigned long> claimed_order;
  std::vector<std::string> diffs;
  bool pass() const { return diffs.empty(); }
};

struct CatalogReport {
  std::optional<std::size_t> dim;
  std::vector<EntryCheck> entries;
  std::vector<FamilyCheck> families;
  std::size_t passed() const;
  std::size_t failed() const;
};

/// Families on the fixed grids, with the claimed orders and the m = 2
/// exclusion for g10m1.
std::vector<FamilyCheck> verify_families(std::optional<std::size_t> dim = std::nullopt);
CatalogReport verify_catalog(std::optional<std::size_t> dim = std::nullopt);

}  // namespace liefix
