#pragma once

// Deterministic construction of tower levels: canonical irreducibles,
// extensions, and square roots with on-demand extension.

#include <utility>

#include "isoconj/field.hpp"
#include "isoconj/poly.hpp"

namespace isoconj {

/// Rabin's test over the level of `f`. Constants and the zero polynomial are not irreducible.
bool is_irreducible(const Polynomial& f);

/// First monic irreducible of degree d over `level` in scan order: candidates
/// x^d + a_{d-1}x^{d-1} + ... + a_0 are visited by increasing
/// sum_i index(a_i) q^i, so the constant term varies fastest.
Polynomial find_irreducible(Level level, std::size_t degree);

/// level[t]/(find_irreducible(level, degree)); extend(L, 1) == L. Memoized.
Level extend(Level level, std::size_t degree);

/// Level of the checked extension by a caller-supplied defining polynomial.
/// Throws InvalidForm if the polynomial is not monic irreducible.
Level extend_with(const Polynomial& defining_polynomial);

struct SquareRoot {
  Level level;
  FieldElement root;
};

/// Smallest level on the element's chain (or its quadratic extension)
/// holding a square root; returns the root least in coefficient order.
SquareRoot sqrt_or_extend(const FieldElement& a);

}  // namespace isoconj
