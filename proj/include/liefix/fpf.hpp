#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "liefix/lie.hpp"

namespace liefix {

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

/// Filiform-specific fields of a decision.
struct FiliformFacts {
  bool cnla = false;
  std::optional<FieldMatrix> nonsingular_derivation;
  std::string graded_type;  // "L" or "Q"
  std::string certificate_kind;  // "exact" or "numeric"
  // The equivalent statements of the filiform criterion, all equal to !cnla.
  bool not_cnla = false;
  bool has_nonsingular_derivation = false;
  bool is_derived_algebra = false;
};

struct FpfDecision {
  Verdict verdict = Verdict::Unknown;
  std::string engine;  // abelian, almost_abelian, filiform, catalog, none
  std::string reason_code;
  std::string reason;
  std::optional<unsigned> n;
  std::optional<AutomorphismReport> witness;
  std::optional<FiliformFacts> filiform;
};

}  // namespace liefix
