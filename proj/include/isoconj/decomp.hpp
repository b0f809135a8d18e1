#pragma once

#include <vector>

#include "isoconj/forms.hpp"

namespace isoconj {

struct JordanPair {
  Matrix semisimple;
  Matrix unipotent;
  Polynomial semisimple_poly;  // p_s(T) = T_s
  Polynomial unipotent_poly;   // p_u(T) = T_u
};

/// T = T_s T_u with T_s semisimple, T_u unipotent, both polynomials in T.
/// Parts are returned over T's level. Throws NotIsometry, CharacteristicTooSmall.
JordanPair multiplicative_jordan(const Matrix& t, const BilinearSpace& v);

struct PrimaryPart {
  Subspace space;
  Matrix gram;  // restricted Gram
};

struct StandardPart {
  FieldElement lambda;  // least of {lambda, lambda^-1} in coefficient order
  FieldElement lambda_inv;
  Subspace v_lambda;
  Subspace v_lambda_inv;
  Matrix gram;  // restricted Gram on [v_lambda | v_lambda_inv]
};

struct PrimaryDecomposition {
  Level level = nullptr;  // splitting level of the characteristic polynomial
  PrimaryPart plus;       // lambda = 1
  PrimaryPart minus;      // lambda = -1
  std::vector<StandardPart> standard;
};

/// V = V_1 + V_-1 + sum (V_lambda + V_lambda^-1), orthogonal. Throws NotIsometry.
PrimaryDecomposition primary_decomposition(const Matrix& t, const BilinearSpace& v);

}  // namespace isoconj
