#pragma once

// Random sampling helpers shared by unit and acceptance tests. Isometries are
// built as products of reflections (symmetric forms) or symplectic
// transvections, which generate the respective groups over finite fields.

#include <random>

#include "isoconj/forms.hpp"

namespace isoconj::testing {

inline FieldElement random_element(Level level, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, level->order() - 1);
  return level->from_index(d(rng));
}

inline Matrix random_matrix(Level level, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(level, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(level, rng);
  return m;
}

/// x -> x - 2 B(x, v) / B(v, v) v
inline Matrix reflection(const BilinearSpace& v, const Matrix& vec) {
  const FieldElement q = v.pair(vec, vec);
  const FieldElement two = v.level()->from_int(2);
  return Matrix::identity(v.level(), v.dim()) - (two / q) * (vec * (vec.transpose() * v.gram()));
}

/// x -> x + a B(x, v) v
inline Matrix transvection(const BilinearSpace& v, const Matrix& vec, const FieldElement& a) {
  return Matrix::identity(v.level(), v.dim()) + a * (vec * (vec.transpose() * v.gram().transpose()));
}

inline Matrix random_isometry(const BilinearSpace& v, std::mt19937_64& rng, int steps = 6) {
  Matrix t = Matrix::identity(v.level(), v.dim());
  for (int i = 0; i < steps; ++i) {
    if (v.kind() == FormKind::Symmetric) {
      Matrix vec = random_matrix(v.level(), v.dim(), 1, rng);
      while (v.pair(vec, vec).is_zero()) vec = random_matrix(v.level(), v.dim(), 1, rng);
      t = t * reflection(v, vec);
    } else {
      t = t * transvection(v, random_matrix(v.level(), v.dim(), 1, rng), random_element(v.level(), rng));
    }
  }
  return t;
}

}  // namespace isoconj::testing
