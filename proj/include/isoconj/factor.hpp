#pragma once

// Factorization over tower levels, splitting fields and the self-dual split of
// characteristic polynomials of isometries.

#include <cstdint>
#include <utility>
#include <vector>

#include "isoconj/poly.hpp"

namespace isoconj {

inline constexpr std::uint64_t kFactorSeed = 0x6a09e667f3bcc909ULL;

struct Factorization {
  FieldElement unit;  // leading coefficient of the input
  std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, multiplicity
  std::uint64_t seed = kFactorSeed;  // equal-degree splitting PRNG seed
};

/// Squarefree, distinct-degree, then equal-degree (Cantor-Zassenhaus) splitting.
/// Factors are canonically sorted. Throws ZeroPolynomial.
Factorization factorize(const Polynomial& f);

struct RootMultiplicity {
  FieldElement root;
  int multiplicity;
};

/// Roots lying in the level of f, ascending by coefficient order.
std::vector<RootMultiplicity> roots(const Polynomial& f);

struct SplittingField {
  Level level;
  std::vector<RootMultiplicity> roots;
};

/// Smallest extension of f's level (by the lcm of the irreducible factor degrees)
/// over which f splits. Throws ZeroPolynomial.
SplittingField splitting_field(const Polynomial& f);

struct RootPair {
  FieldElement lambda;      // canonical representative (least index)
  FieldElement lambda_inv;
  int multiplicity;
};

struct SelfDualSplit {
  int l = 0;  // multiplicity of (x - 1)
  int m = 0;  // multiplicity of (x + 1)
  Polynomial chi_o{nullptr};
  Level root_level = nullptr;
  std::vector<RootPair> pairs;
};

/// chi = (x-1)^l (x+1)^m chi_o. Throws SingularOperator for a zero constant
/// term and NotSelfDual if some root's inverse has a different multiplicity.
SelfDualSplit self_dual_split(const Polynomial& chi);

}  // namespace isoconj
