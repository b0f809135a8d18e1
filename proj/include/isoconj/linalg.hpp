#pragma once

// Exact dense linear algebra over tower levels. Eigen-computations lift their
// inputs to the splitting level of the characteristic polynomial and report
// the level they used.

#include <optional>
#include <vector>

#include "isoconj/factor.hpp"
#include "isoconj/matrix.hpp"

namespace isoconj {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots taken at the first usable row.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Columns of `basis` span the subspace and are linearly independent.
struct Subspace {
  Matrix basis;

  std::size_t dim() const noexcept { return basis.cols(); }
  std::size_t ambient() const noexcept { return basis.rows(); }
  Level level() const noexcept { return basis.level(); }
};

/// Canonical reduced-echelon kernel basis: one vector per free column, in order.
Subspace kernel(const Matrix& a);
/// Linearly independent subset of the columns (first ones kept).
Subspace column_space(const Matrix& a);
/// True if every column of v lies in the column span of `basis`.
bool in_span(const Matrix& basis, const Matrix& v);

/// Particular solution of A X = B with free variables zero; nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Throws SingularOperator.
Matrix inverse(const Matrix& a);
FieldElement determinant(const Matrix& a);

/// det(xI - T) by fraction-free (Bareiss) elimination over F[x].
Polynomial characteristic_polynomial(const Matrix& t);
/// Monic generator of the annihilator of T. Throws ShapeError.
Polynomial minimal_polynomial(const Matrix& t);

/// Coordinates M of T on an invariant subspace: T * basis = basis * M.
/// Throws ShapeError if the span is not T-invariant.
Matrix restrict_operator(const Matrix& t, const Matrix& basis);

/// kernel((T - lambda I)^dim), computed at the common level of T and lambda.
Subspace generalized_eigenspace(const Matrix& t, const FieldElement& lambda);

struct ElementaryDivisor {
  FieldElement eigenvalue;
  std::size_t size;
};

/// Multiset of Jordan blocks (x - lambda)^size, sorted by eigenvalue
/// (coefficient order) then by decreasing size.
struct ElementaryDivisorSet {
  Level level = nullptr;
  std::vector<ElementaryDivisor> entries;

  std::size_t dimension() const;
  /// Equal multisets over a common level; unrelated levels compare unequal.
  friend bool operator==(const ElementaryDivisorSet& a, const ElementaryDivisorSet& b);
};

struct Spectrum {
  Polynomial characteristic{nullptr};
  SplittingField split;
};

Spectrum spectrum(const Matrix& t);

/// Throws SingularOperator when det T = 0.
ElementaryDivisorSet elementary_divisors(const Matrix& t);

struct JordanBasis {
  /// Columns are Jordan chains, each ordered (N^{k-1} v, ..., N v, v).
  Matrix basis;
  ElementaryDivisorSet divisors;
};

/// basis^{-1} T basis = jordan_matrix(divisors). Works for singular T too.
JordanBasis jordan_basis(const Matrix& t);
/// Upper-triangular Jordan matrix in the divisor order.
Matrix jordan_matrix(const ElementaryDivisorSet& divisors);

/// X with X T X^{-1} = S when the elementary divisors agree, else nullopt.
/// Throws ShapeError on mismatched or non-square inputs.
std::optional<Matrix> gl_conjugacy_witness(const Matrix& s, const Matrix& t);

}  // namespace isoconj
