#include "isoconj/oracle.hpp"

#include <functional>

#include "isoconj/error.hpp"

namespace isoconj {

namespace {

constexpr std::uint64_t kCandidateCap = std::uint64_t{1} << 24;

// Visits every size-w subset of {0..r-1} in lexicographic order.
bool for_each_subset(std::size_t r, std::size_t w, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == r - w + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Matrix> brute_force_conjugate(const Matrix& s, const Matrix& t, const BilinearSpace& v, Level level) {
  const std::size_t n = v.dim();
  if (n > 4 || level->order() > 25) throw Error(ErrorCode::TooLarge, "oracle limited to dim <= 4 over at most 25 elements");
  if (!s.is_square() || !t.is_square() || s.rows() != n || t.rows() != n) {
    throw Error(ErrorCode::ShapeError, "operator dimension mismatch");
  }
  const Matrix sl = s.lift(level), tl = t.lift(level), g = v.gram().lift(level);

  // vec(X) row-major; equation (X T - S X)_{ab} = sum_k X_{ak} T_{kb} - S_{ak} X_{kb}
  Matrix eq(level, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        eq(a * n + b, a * n + k) = eq(a * n + b, a * n + k) + tl(k, b);
        eq(a * n + b, k * n + b) = eq(a * n + b, k * n + b) - sl(a, k);
      }
  const Subspace sol = kernel(eq);
  const std::size_t r = sol.dim();
  const std::uint64_t q = level->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total *= q;
    if (total > kCandidateCap) throw Error(ErrorCode::TooLarge, "solution space too large to enumerate");
  }

  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix x(level, n, n);
    for (std::size_t k = 0; k < n * n; ++k) x(k / n, k % n) = sol.basis(k, i);
    basis.push_back(std::move(x));
  }

  std::optional<Matrix> found;
  for (std::size_t w = 1; w <= r && !found; ++w) {
    for_each_subset(r, w, [&](const std::vector<std::size_t>& support) {
      // nonzero values, lexicographic by element index
      std::vector<std::uint64_t> val(w, 1);
      while (true) {
        Matrix x(level, n, n);
        for (std::size_t i = 0; i < w; ++i) x = x + level->from_index(val[i]) * basis[support[i]];
        if (x.transpose() * g * x == g && !determinant(x).is_zero()) {
          found = std::move(x);
          return true;
        }
        std::size_t i = w;
        while (i > 0 && val[i - 1] == q - 1) val[--i] = 1;
        if (i == 0) return false;
        ++val[i - 1];
      }
    });
  }
  return found;
}

std::vector<Matrix> enumerate_isometries(const BilinearSpace& v) {
  const std::size_t n = v.dim();
  const std::uint64_t q = v.level()->order();
  if (!((n <= 3 && q <= 7) || (n == 4 && q == 3))) {
    throw Error(ErrorCode::TooLarge, "enumeration limited to dim <= 3 over at most 7 elements, or dim 4 over GF(3)");
  }
  const Level l = v.level();
  const Matrix& g = v.gram();

  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < n; ++i) vectors *= q;
  std::vector<Matrix> all;
  for (std::uint64_t idx = 0; idx < vectors; ++idx) {
    Matrix c(l, n, 1);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      c(i, 0) = l->from_index(rest % q);
      rest /= q;
    }
    all.push_back(std::move(c));
  }

  std::vector<Matrix> out;
  std::vector<const Matrix*> cols;
  std::function<void()> extend = [&] {
    const std::size_t j = cols.size();
    if (j == n) {
      std::vector<Matrix> parts;
      for (const auto* c : cols) parts.push_back(*c);
      out.push_back(Matrix::hcat(l, n, parts));
      return;
    }
    for (const auto& c : all) {
      bool ok = v.pair(c, c) == g(j, j);
      for (std::size_t i = 0; i < j && ok; ++i) ok = v.pair(*cols[i], c) == g(i, j) && v.pair(c, *cols[i]) == g(j, i);
      if (!ok) continue;
      cols.push_back(&c);
      extend();
      cols.pop_back();
    }
  };
  extend();
  return out;
}

}  // namespace isoconj
