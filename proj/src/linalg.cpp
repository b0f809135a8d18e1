#include "isoconj/linalg.hpp"

#include <algorithm>

#include "isoconj/error.hpp"

namespace isoconj {

Echelon rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    }
    const FieldElement inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldElement f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Subspace kernel(const Matrix& a) {
  const Echelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  Matrix basis(a.level(), n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = a.level()->one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free[k]);
  }
  return {std::move(basis)};
}

Subspace column_space(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<Matrix> cols;
  for (auto p : e.pivots) cols.push_back(a.column(p));
  return {Matrix::hcat(a.level(), a.rows(), cols)};
}

bool in_span(const Matrix& basis, const Matrix& v) {
  const Matrix both[] = {basis, v};
  return rank(Matrix::hcat(basis.level(), basis.rows(), both)) == rank(basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeError, "solve: row mismatch");
  const Level l = common_level(a.level(), b.level());
  const Matrix parts[] = {a.lift(l), b.lift(l)};
  const Echelon e = rref(Matrix::hcat(l, a.rows(), parts));
  Matrix x(l, a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t p = e.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.reduced(i, a.cols() + j);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeError, "inverse of a non-square matrix");
  auto x = solve(a, Matrix::identity(a.level(), a.rows()));
  if (!x || rank(a) != a.rows()) throw Error(ErrorCode::SingularOperator, "matrix is singular");
  return *x;
}

FieldElement determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeError, "determinant of a non-square matrix");
  Matrix m = a;
  FieldElement det = a.level()->one();
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    while (pr < n && m(pr, k).is_zero()) ++pr;
    if (pr == n) return a.level()->zero();
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    const FieldElement inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const FieldElement f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

Polynomial characteristic_polynomial(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::ShapeError, "characteristic polynomial of a non-square matrix");
  const Level l = t.level();
  const std::size_t n = t.rows();
  if (n == 0) return Polynomial::constant(l->one());
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(l)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = i == j ? Polynomial(l, {-t(i, j), l->one()}) : Polynomial(l, {-t(i, j)});
    }
  }
  bool negate = false;
  Polynomial prev = Polynomial::constant(l->one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pr = k + 1;
      while (pr < n && m[pr][k].is_zero()) ++pr;
      if (pr == n) return Polynomial(l);
      std::swap(m[pr], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Polynomial minimal_polynomial(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::ShapeError, "minimal polynomial of a non-square matrix");
  const Level l = t.level();
  const std::size_t n = t.rows();
  const std::size_t n2 = n * n;
  auto vec = [&](const Matrix& m) {
    Matrix v(l, n2, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v(i * n + j, 0) = m(i, j);
    }
    return v;
  };
  std::vector<Matrix> powers{vec(Matrix::identity(l, n))};
  Matrix cur = Matrix::identity(l, n);
  for (std::size_t k = 1; k <= n; ++k) {
    cur = cur * t;
    const Matrix target = vec(cur);
    const Matrix basis = Matrix::hcat(l, n2, powers);
    if (auto c = solve(basis, target)) {
      std::vector<FieldElement> coeffs;
      for (std::size_t i = 0; i < k; ++i) coeffs.push_back(-(*c)(i, 0));
      coeffs.push_back(l->one());
      return Polynomial(l, std::move(coeffs));
    }
    powers.push_back(target);
  }
  throw Error(ErrorCode::Internal, "minimal polynomial exceeded the dimension");
}

Matrix restrict_operator(const Matrix& t, const Matrix& basis) {
  auto m = solve(basis, t * basis);
  if (!m) throw Error(ErrorCode::ShapeError, "subspace is not invariant under the operator");
  return *m;
}

Subspace generalized_eigenspace(const Matrix& t, const FieldElement& lambda) {
  if (!t.is_square()) throw Error(ErrorCode::ShapeError, "generalized eigenspace of a non-square matrix");
  const Level l = common_level(t.level(), lambda.level());
  const Matrix n = t.lift(l) - lambda * Matrix::identity(l, t.rows());
  return kernel(n.pow(t.rows()));
}

std::size_t ElementaryDivisorSet::dimension() const {
  std::size_t d = 0;
  for (const auto& e : entries) d += e.size;
  return d;
}

bool operator==(const ElementaryDivisorSet& a, const ElementaryDivisorSet& b) {
  if (a.entries.size() != b.entries.size()) return false;
  if (!comparable(a.level, b.level)) return a.entries.empty();
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].size != b.entries[i].size) return false;
    if (!(a.entries[i].eigenvalue == b.entries[i].eigenvalue)) return false;
  }
  return true;
}

Spectrum spectrum(const Matrix& t) {
  Spectrum s;
  s.characteristic = characteristic_polynomial(t);
  s.split = splitting_field(s.characteristic);
  return s;
}

ElementaryDivisorSet elementary_divisors(const Matrix& t) {
  Spectrum s = spectrum(t);
  if (s.characteristic.coefficient(0).is_zero()) throw Error(ErrorCode::SingularOperator, "operator is singular");
  const Level l = s.split.level;
  const Matrix tl = t.lift(l);
  const std::size_t n = t.rows();
  ElementaryDivisorSet out{l, {}};
  for (const auto& r : s.split.roots) {
    const Matrix nl = tl - r.root * Matrix::identity(l, n);
    // ranks[j] = rank(N^j); blocks of size >= j: ranks[j-1] - ranks[j]
    std::vector<std::size_t> ranks{n};
    Matrix power = Matrix::identity(l, n);
    while (ranks.back() > n - static_cast<std::size_t>(r.multiplicity)) {
      power = power * nl;
      ranks.push_back(rank(power));
    }
    ranks.push_back(ranks.back());
    std::vector<ElementaryDivisor> here;
    for (std::size_t j = 1; j + 1 < ranks.size(); ++j) {
      const std::size_t at_least_j = ranks[j - 1] - ranks[j];
      const std::size_t at_least_next = ranks[j] - ranks[j + 1];
      for (std::size_t c = 0; c < at_least_j - at_least_next; ++c) here.push_back({r.root, j});
    }
    std::sort(here.begin(), here.end(), [](const auto& a, const auto& b) { return a.size > b.size; });
    out.entries.insert(out.entries.end(), here.begin(), here.end());
  }
  return out;
}

JordanBasis jordan_basis(const Matrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::ShapeError, "Jordan basis of a non-square matrix");
  Spectrum s = spectrum(t);
  const Level l = s.split.level;
  const Matrix tl = t.lift(l);
  const std::size_t n = t.rows();
  std::vector<Matrix> columns;
  ElementaryDivisorSet divisors{l, {}};
  for (const auto& r : s.split.roots) {
    const Matrix nl = tl - r.root * Matrix::identity(l, n);
    // kernels[j] = ker N^j, until the dimension reaches the multiplicity
    std::vector<Matrix> kernels{Matrix(l, n, 0)};
    Matrix power = Matrix::identity(l, n);
    while (kernels.back().cols() < static_cast<std::size_t>(r.multiplicity)) {
      power = power * nl;
      kernels.push_back(kernel(power).basis);
    }
    struct Chain {
      Matrix top;
      std::size_t length;
    };
    std::vector<Chain> chains;
    for (std::size_t k = kernels.size() - 1; k >= 1; --k) {
      std::vector<Matrix> base{kernels[k - 1]};
      for (const auto& c : chains) base.push_back(nl.pow(c.length - k) * c.top);
      Matrix span = Matrix::hcat(l, n, base);
      for (std::size_t j = 0; j < kernels[k].cols(); ++j) {
        Matrix v = kernels[k].column(j);
        if (in_span(span, v)) continue;
        chains.push_back({v, k});
        const Matrix ext[] = {span, v};
        span = Matrix::hcat(l, n, ext);
      }
    }
    for (const auto& c : chains) {
      for (std::size_t i = c.length; i-- > 0;) columns.push_back(nl.pow(i) * c.top);
      divisors.entries.push_back({r.root, c.length});
    }
  }
  return {Matrix::hcat(l, n, columns), std::move(divisors)};
}

Matrix jordan_matrix(const ElementaryDivisorSet& divisors) {
  const std::size_t n = divisors.dimension();
  Matrix j(divisors.level, n, n);
  std::size_t off = 0;
  for (const auto& e : divisors.entries) {
    for (std::size_t i = 0; i < e.size; ++i) {
      j(off + i, off + i) = e.eigenvalue.lift(divisors.level);
      if (i + 1 < e.size) j(off + i, off + i + 1) = divisors.level->one();
    }
    off += e.size;
  }
  return j;
}

std::optional<Matrix> gl_conjugacy_witness(const Matrix& s, const Matrix& t) {
  if (!s.is_square() || !t.is_square() || s.rows() != t.rows()) {
    throw Error(ErrorCode::ShapeError, "conjugacy witness needs square matrices of equal size");
  }
  const Level l = common_level(s.level(), t.level());
  const Matrix sl = s.lift(l), tl = t.lift(l);
  if (!(characteristic_polynomial(sl) == characteristic_polynomial(tl))) return std::nullopt;
  JordanBasis js = jordan_basis(sl);
  JordanBasis jt = jordan_basis(tl);
  if (!(js.divisors == jt.divisors)) return std::nullopt;
  return js.basis * inverse(jt.basis);
}

}  // namespace isoconj
