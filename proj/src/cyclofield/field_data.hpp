#pragma once

#include <vector>

#include "liefix/cyclo.hpp"

namespace liefix::detail {

/// Per-conductor data shared by all scalars; entries live for the program.
struct FieldData {
  unsigned m = 1;
  unsigned degree = 1;      // phi(m)
  std::vector<long> phi;    // Phi_m, low first, monic
};

const FieldData& field(unsigned m);

/// Reduces p (any length) modulo Phi_m in place, leaving exactly phi(m) entries.
void reduce_mod_phi(const FieldData& f, std::vector<Rational>& p);

}  // namespace liefix::detail
