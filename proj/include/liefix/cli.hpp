#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "liefix/catalog.hpp"

namespace liefix::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitResource = 3;

int exit_code_for(ErrorKind kind);

/// Reads and parses a JSON file. Syntax errors become ParseError with the
/// line and column.
Json read_json_file(const std::string& path);

/// Algebra JSON: {"name", "dim", "conductor", "brackets": {"i,j": {"k": scalar}}},
/// 1-based with i < j. Throws ParseError (with the offending field),
/// JacobiViolation, or ResourceLimit when the conductor exceeds the limit.
LieAlgebra algebra_from_json(const Json& j, unsigned conductor_limit = 1000);
/// Matrix JSON: {"rows", "cols", "conductor", "entries": [[scalar, ...], ...]}.
FieldMatrix matrix_from_json(const Json& j, unsigned conductor_limit = 1000);

Json algebra_to_json(const LieAlgebra& g);
/// Written under the lcm of `conductor` and the entries' conductors.
Json matrix_to_json(const FieldMatrix& m, unsigned conductor = 1);

Json automorphism_to_json(const AutomorphismReport& r, unsigned conductor, unsigned digits);
Json decision_to_json(const FpfDecision& d, unsigned conductor, unsigned digits);
Json analysis_to_json(const LieAlgebra& g);
Json cyclotomic_to_json(const CyclotomicReport& r, unsigned conductor);
Json catalog_list_json();
Json catalog_report_json(const CatalogReport& r);

/// "path: value" lines, one per leaf, in document order.
std::string to_plain(const Json& j);

struct Output {
  int exit_code = kExitOk;
  std::string out;  // report, stdout
  std::string err;  // diagnostics, stderr
};

/// args excludes the program name.
Output run(const std::vector<std::string>& args);

}  // namespace liefix::cli
