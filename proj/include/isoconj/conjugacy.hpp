#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoconj/decomp.hpp"
#include "isoconj/jm_sl2.hpp"

namespace isoconj {

enum class CaseTag { Case1Standard, Case2Unipotent, Case3Negative, MixedSplit };
std::string_view to_string(CaseTag tag);

struct CaseTraceEntry {
  std::string component;
  CaseTag tag;
};

struct ConjugacyVerdict {
  bool conjugate = false;
  std::optional<Matrix> witness;  // C with C T C^-1 = S and C^T G C = G
  Level level = nullptr;          // level of the witness (input level when none)
  ElementaryDivisorSet divisors_s;
  ElementaryDivisorSet divisors_t;
  std::vector<CaseTraceEntry> case_trace;
};

/// Decides conjugacy of S and T in the isometry group of V and builds a
/// witness, possibly over an extension level. Throws NotIsometry,
/// CharacteristicTooSmall.
ConjugacyVerdict isometry_conjugacy(const Matrix& s, const Matrix& t, const BilinearSpace& v);

/// diag(X, X^{-T}): the isometry of a dual pair acting as X on the first half.
Matrix dual_pair_map(const Matrix& x);

/// dual_pair_map(X) for some X with X TL X^-1 = SL. Throws DivisorMismatch.
Matrix case1_witness(const Matrix& sl, const Matrix& tl);

/// Witness for unipotent isometries S, T of V with equal elementary divisors.
/// Throws DivisorMismatch, NotUnipotent, NotIsometry, CharacteristicTooSmall.
Matrix case2_witness(const Matrix& s, const Matrix& t, const BilinearSpace& v);

/// case2_witness(-S, -T, V), valid for S and T since negation commutes with conjugation.
Matrix case3_reduce(const Matrix& s, const Matrix& t, const BilinearSpace& v);

}  // namespace isoconj
