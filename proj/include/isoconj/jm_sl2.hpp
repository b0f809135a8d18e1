#pragma once

// sl2-triples inside the Lie algebra of a bilinear space, their irreducible
// decompositions, and the orthogonal decomposition of a unipotent isometry
// into indecomposable summands and standard pairs.

#include <string_view>
#include <vector>

#include "isoconj/forms.hpp"

namespace isoconj {

struct Sl2Triple {
  Matrix e, h, f;
  BilinearSpace space;
};

/// Triple with e = N. Throws CharacteristicTooSmall, ZeroNilpotent,
/// NotNilpotent, NotInLieAlgebra (checked in that order).
Sl2Triple sl2_triple(const Matrix& n, const BilinearSpace& v);

/// Brackets [h,e] = 2e, [h,f] = -2f, [e,f] = h and Lie membership of all three.
bool is_sl2_triple(const Sl2Triple& t);

enum class RestrictionClass { Zero, Nondegenerate, Mixed };
std::string_view to_string(RestrictionClass c);

/// Classifies B restricted to W. Throws ShapeError.
RestrictionClass classify_restriction(const Subspace& w, const BilinearSpace& v);

struct IrreducibleSummand {
  Subspace space;  // columns v, f v, ..., f^m v with v a highest weight vector
  std::size_t highest_weight;
  RestrictionClass restriction;
};

/// Irreducible summands by descending highest weight. Highest weight vectors of
/// each weight are chosen orthogonal (or in symplectic pairs) for the induced
/// form, so every summand is either non-degenerate or totally isotropic.
std::vector<IrreducibleSummand> sl2_irreducible_decomposition(const Sl2Triple& t);

/// Gram of the invariant form on Sym^m(F^2) in the basis x^m, x^{m-1} y, ..., y^m.
/// Throws CharacteristicTooSmall if p <= m.
BilinearSpace sym_power_form(std::size_t m, Level level);

/// Actions of the standard sl2 basis on Sym^m(F^2) in the monomial basis.
struct SymPowerModel {
  Matrix e;  // x d/dy
  Matrix h;
  Matrix f;  // y d/dx
};
SymPowerModel sym_power_model(std::size_t m, Level level);

struct StandardSummandPair {
  IrreducibleSummand first, second;
};

struct UnipotentOrthogonalDecomposition {
  Sl2Triple triple;
  std::vector<IrreducibleSummand> indecomposables;
  std::vector<StandardSummandPair> standard_pairs;
};

/// Decomposes a unipotent isometry using the triple through log T. Throws
/// CharacteristicTooSmall, NotIsometry, NotUnipotent.
UnipotentOrthogonalDecomposition unipotent_orthogonal_decomposition(const Matrix& t, const BilinearSpace& v);

/// sum_{k < dim} X^k / k! for nilpotent X (requires p >= dim).
Matrix nilpotent_exp(const Matrix& x);
/// sum_{1 <= k < dim} (-1)^{k+1} (T - I)^k / k for unipotent T (requires p >= dim).
Matrix unipotent_log(const Matrix& t);

bool is_nilpotent(const Matrix& x);
bool is_unipotent(const Matrix& t);

}  // namespace isoconj
