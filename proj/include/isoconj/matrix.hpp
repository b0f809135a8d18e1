#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoconj/field.hpp"
#include "isoconj/poly.hpp"

namespace isoconj {

/// Dense row-major matrix over a tower level. Mixed-level arithmetic lifts to
/// the deeper level of the chain.
class Matrix {
 public:
  Matrix(Level level, std::size_t rows, std::size_t cols);

  static Matrix identity(Level level, std::size_t n);
  static Matrix from_ints(Level level, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix diagonal(std::span<const FieldElement> entries);
  /// Columns given as n x 1 matrices (or wider blocks), concatenated left to right.
  static Matrix hcat(Level level, std::size_t rows, std::span<const Matrix> blocks);
  static Matrix block_diagonal(Level level, std::span<const Matrix> blocks);

  Level level() const noexcept { return level_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix lift(Level target) const;
  std::optional<Matrix> descend(Level target) const;
  /// Expressed over the lowest level on the chain containing every entry.
  Matrix minimal() const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix pow(std::size_t k) const;

  std::string to_string() const;

 private:
  Level level_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

/// p(M) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& m);

/// [A, B] = AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace isoconj
