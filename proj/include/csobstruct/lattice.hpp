#pragma once

// Characteristic-like classes of a negative definite lattice: integer
// vectors with the same square and the same reduction mod 2 as a given e.

#include <vector>

#include "csobstruct/exactq.hpp"

namespace csobstruct {

using IntVector = std::vector<BigInt>;

struct CharClassSet {
  IntMatrix form;
  IntVector base_e;
  /// One representative per {v, -v}: first nonzero entry positive.
  /// Sorted lexicographically.
  std::vector<IntVector> classes;
};

/// v^T M v.
BigInt quadratic_form(const IntMatrix& m, const IntVector& v);

/// All leading principal minors of -M positive. Requires M symmetric.
bool is_negative_definite(const IntMatrix& m);

/// Exhaustive via Fincke-Pohst enumeration on an exact LDL^T factorisation
/// of -form. Throws std::invalid_argument if form is not symmetric negative
/// definite or e has the wrong length.
CharClassSet enumerate_char_classes(const IntMatrix& form, const IntVector& e);

}  // namespace csobstruct
