#pragma once

#include <optional>
#include <string_view>

#include "isoconj/linalg.hpp"

namespace isoconj {

enum class FormKind { Symmetric, Symplectic };
enum class FormDefect { Asymmetric, Degenerate, OddDimSkew };

std::string_view to_string(FormKind kind);
std::string_view to_string(FormDefect defect);

struct FormClassification {
  std::optional<FormKind> kind;      // set when valid
  std::optional<FormDefect> defect;  // set when invalid

  bool valid() const noexcept { return kind.has_value(); }
};

/// Throws ShapeError for non-square input.
FormClassification classify_form(const Matrix& gram);

/// A non-degenerate symmetric or symplectic space (V, B).
class BilinearSpace {
 public:
  /// Throws InvalidForm when `gram` does not classify as `kind`.
  BilinearSpace(Matrix gram, FormKind kind);
  /// Classifies the Gram matrix; throws InvalidForm with the defect otherwise.
  static BilinearSpace from_gram(Matrix gram);

  const Matrix& gram() const noexcept { return gram_; }
  FormKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  Level level() const noexcept { return gram_.level(); }
  /// +1 for symmetric, -1 for symplectic: B(w, v) = sign * B(v, w).
  int sign() const noexcept { return kind_ == FormKind::Symmetric ? 1 : -1; }

  /// B(v, w) = v^T G w for column vectors.
  FieldElement pair(const Matrix& v, const Matrix& w) const;
  /// basis^T G basis
  Matrix restricted_gram(const Matrix& basis) const;
  BilinearSpace lift(Level target) const;

 private:
  Matrix gram_;
  FormKind kind_;
};

/// Throws CharacteristicTooSmall unless p is odd and p > dim V.
void require_characteristic_gate(const BilinearSpace& v);

/// T^T G T == G exactly. Throws ShapeError on a dimension mismatch.
bool is_isometry(const Matrix& t, const BilinearSpace& v);
/// Throws NotIsometry (or ShapeError) unless is_isometry.
void require_isometry(const Matrix& t, const BilinearSpace& v);
/// X^T G + G X == 0
bool in_lie_algebra(const Matrix& x, const BilinearSpace& v);

/// {w in W : B(w, W) = 0}, as ambient vectors.
Subspace radical(const BilinearSpace& v, const Subspace& w);

struct StandardPairBasis {
  Matrix e;        // basis of the first isotropic subspace
  Matrix f;        // dual basis of the second, B(e_i, f_j) = delta_ij
  Matrix pairing;  // e^T G f, the identity

  /// [e | f], whose Gram is [[0, I], [sign I, 0]].
  Matrix frame() const;
};

/// Throws IsotropyViolation if B does not vanish on an input, DegeneratePairing
/// if the cross-pairing is singular or the dimensions differ.
StandardPairBasis standard_pair_basis(const BilinearSpace& v, const Subspace& first, const Subspace& second);

/// Identity (symmetric) or [[0, I], [-I, 0]] (symplectic).
Matrix canonical_gram(FormKind kind, Level level, std::size_t n);
/// [[0, I], [sign I, 0]]
Matrix dual_pair_gram(FormKind kind, Level level, std::size_t half);

/// P with P^T G P diagonal with nonzero entries, over G's level. G symmetric, non-degenerate.
Matrix orthogonal_basis(const Matrix& gram);
/// P with P^T G P = [[0, I], [-I, 0]], columns (e_1..e_k, f_1..f_k). G skew, non-degenerate.
Matrix symplectic_basis(const Matrix& gram);

/// Change of basis P with P^T G P = canonical_gram. Symmetric spaces take
/// square roots and may return P over an extension level.
Matrix normal_basis(const BilinearSpace& v);

}  // namespace isoconj
