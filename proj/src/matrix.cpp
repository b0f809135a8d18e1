#include "isoconj/matrix.hpp"

#include <sstream>

#include "isoconj/error.hpp"

namespace isoconj {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::ShapeError, what);
}

}  // namespace

Matrix::Matrix(Level level, std::size_t rows, std::size_t cols)
    : level_(level), rows_(rows), cols_(cols), data_(rows * cols, level->zero()) {}

Matrix Matrix::identity(Level level, std::size_t n) {
  Matrix m(level, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = level->one();
  return m;
}

Matrix Matrix::from_ints(Level level, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(level, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_shape(row.size() == c, "ragged matrix literal");
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = level->from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const FieldElement> entries) {
  Level l = entries.front().level();
  for (const auto& e : entries) l = common_level(l, e.level());
  Matrix m(l, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i].lift(l);
  return m;
}

Matrix Matrix::hcat(Level level, std::size_t rows, std::span<const Matrix> blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require_shape(b.rows() == rows, "hcat row mismatch");
    level = common_level(level, b.level());
    cols += b.cols();
  }
  Matrix m(level, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j).lift(level);
    }
    off += b.cols();
  }
  return m;
}

Matrix Matrix::block_diagonal(Level level, std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    level = common_level(level, b.level());
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(level, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j).lift(level);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(level_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  require_shape(first + count <= cols_, "column range out of bounds");
  Matrix m(level_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  }
  return m;
}

Matrix Matrix::lift(Level target) const {
  if (target == level_) return *this;
  Matrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].lift(target);
  return m;
}

std::optional<Matrix> Matrix::descend(Level target) const {
  if (target == level_) return *this;
  Matrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    auto d = data_[k].descend(target);
    if (!d) return std::nullopt;
    m.data_[k] = std::move(*d);
  }
  return m;
}

Matrix Matrix::minimal() const {
  Matrix cur = *this;
  while (cur.level_->parent()) {
    auto d = cur.descend(cur.level_->parent());
    if (!d) break;
    cur = std::move(*d);
  }
  return cur;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.data_) e = -e;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
  Level l = common_level(a.level_, b.level_);
  Matrix m = a.lift(l);
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
  Level l = common_level(a.level_, b.level_);
  Matrix m = a.lift(l);
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_shape(a.cols_ == b.rows_, "matrix product shape mismatch");
  Level l = common_level(a.level_, b.level_);
  const Matrix al = a.lift(l), bl = b.lift(l);
  Matrix m(l, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = al(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * bl(k, j);
    }
  }
  return m;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
  Level l = common_level(s.level(), a.level_);
  Matrix m = a.lift(l);
  for (auto& e : m.data_) e = s * e;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (!(a.data_[k] == b.data_[k])) return false;
  }
  return true;
}

Matrix Matrix::pow(std::size_t k) const {
  require_shape(is_square(), "power of a non-square matrix");
  Matrix result = identity(level_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  require_shape(m.is_square(), "polynomial of a non-square matrix");
  Level l = common_level(p.level(), m.level());
  Matrix acc(l, m.rows(), m.cols());
  const Matrix id = Matrix::identity(l, m.rows());
  for (std::size_t i = p.coefficients().size(); i-- > 0;) acc = acc * m + p.coefficients()[i] * id;
  return acc;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace isoconj
