#include "isoconj/forms.hpp"

#include "isoconj/error.hpp"
#include "isoconj/tower.hpp"

namespace isoconj {

std::string_view to_string(FormKind kind) {
  return kind == FormKind::Symmetric ? "symmetric" : "symplectic";
}

std::string_view to_string(FormDefect defect) {
  switch (defect) {
    case FormDefect::Asymmetric: return "asymmetric";
    case FormDefect::Degenerate: return "degenerate";
    case FormDefect::OddDimSkew: return "odd-dim-skew";
  }
  return "unknown";
}

FormClassification classify_form(const Matrix& gram) {
  if (!gram.is_square()) throw Error(ErrorCode::ShapeError, "Gram matrix must be square");
  const Matrix t = gram.transpose();
  FormClassification c;
  if (t == gram) {
    c.kind = FormKind::Symmetric;
  } else if (t == -gram) {
    bool zero_diag = true;
    for (std::size_t i = 0; i < gram.rows(); ++i) zero_diag &= gram(i, i).is_zero();
    if (!zero_diag) {
      c.defect = FormDefect::Asymmetric;
      return c;
    }
    if (gram.rows() % 2 != 0) {
      c.defect = FormDefect::OddDimSkew;
      return c;
    }
    c.kind = FormKind::Symplectic;
  } else {
    c.defect = FormDefect::Asymmetric;
    return c;
  }
  if (determinant(gram).is_zero()) {
    c.kind.reset();
    c.defect = FormDefect::Degenerate;
  }
  return c;
}

BilinearSpace::BilinearSpace(Matrix gram, FormKind kind) : gram_(std::move(gram)), kind_(kind) {
  const auto c = classify_form(gram_);
  if (!c.valid()) {
    throw Error(ErrorCode::InvalidForm, "invalid Gram matrix: " + std::string(to_string(*c.defect)));
  }
  if (*c.kind != kind_) {
    throw Error(ErrorCode::InvalidForm, "Gram matrix is " + std::string(to_string(*c.kind)) + ", not " +
                                            std::string(to_string(kind_)));
  }
}

BilinearSpace BilinearSpace::from_gram(Matrix gram) {
  const auto c = classify_form(gram);
  if (!c.valid()) {
    throw Error(ErrorCode::InvalidForm, "invalid Gram matrix: " + std::string(to_string(*c.defect)));
  }
  return BilinearSpace(std::move(gram), *c.kind);
}

FieldElement BilinearSpace::pair(const Matrix& v, const Matrix& w) const {
  return (v.transpose() * gram_ * w)(0, 0);
}

Matrix BilinearSpace::restricted_gram(const Matrix& basis) const {
  if (basis.rows() != dim()) throw Error(ErrorCode::ShapeError, "basis does not live in this space");
  return basis.transpose() * gram_ * basis;
}

BilinearSpace BilinearSpace::lift(Level target) const {
  BilinearSpace out = *this;
  out.gram_ = gram_.lift(target);
  return out;
}

void require_characteristic_gate(const BilinearSpace& v) {
  const std::uint64_t p = v.level()->characteristic();
  if (p == 2 || p <= v.dim()) {
    throw Error(ErrorCode::CharacteristicTooSmall,
                "characteristic " + std::to_string(p) + " must be odd and exceed the dimension " +
                    std::to_string(v.dim()));
  }
}

bool is_isometry(const Matrix& t, const BilinearSpace& v) {
  if (!t.is_square() || t.rows() != v.dim()) throw Error(ErrorCode::ShapeError, "operator dimension mismatch");
  return t.transpose() * v.gram() * t == v.gram();
}

void require_isometry(const Matrix& t, const BilinearSpace& v) {
  if (!is_isometry(t, v)) throw Error(ErrorCode::NotIsometry, "operator does not preserve the form");
}

bool in_lie_algebra(const Matrix& x, const BilinearSpace& v) {
  if (!x.is_square() || x.rows() != v.dim()) throw Error(ErrorCode::ShapeError, "operator dimension mismatch");
  return (x.transpose() * v.gram() + v.gram() * x).is_zero();
}

Subspace radical(const BilinearSpace& v, const Subspace& w) {
  if (w.ambient() != v.dim()) throw Error(ErrorCode::ShapeError, "subspace does not live in this space");
  const Subspace k = kernel(v.restricted_gram(w.basis));
  return {w.basis * k.basis};
}

Matrix StandardPairBasis::frame() const {
  const Matrix parts[] = {e, f};
  return Matrix::hcat(e.level(), e.rows(), parts);
}

StandardPairBasis standard_pair_basis(const BilinearSpace& v, const Subspace& first, const Subspace& second) {
  if (first.ambient() != v.dim() || second.ambient() != v.dim()) {
    throw Error(ErrorCode::ShapeError, "subspaces do not live in this space");
  }
  if (!v.restricted_gram(first.basis).is_zero() || !v.restricted_gram(second.basis).is_zero()) {
    throw Error(ErrorCode::IsotropyViolation, "form does not vanish on a standard-pair summand");
  }
  if (first.dim() != second.dim()) throw Error(ErrorCode::DegeneratePairing, "summand dimensions differ");
  const Matrix cross = first.basis.transpose() * v.gram() * second.basis;
  if (determinant(cross).is_zero()) throw Error(ErrorCode::DegeneratePairing, "cross-pairing is singular");
  StandardPairBasis out{first.basis, second.basis * inverse(cross), Matrix(v.level(), 0, 0)};
  out.pairing = out.e.transpose() * v.gram() * out.f;
  return out;
}

Matrix canonical_gram(FormKind kind, Level level, std::size_t n) {
  if (kind == FormKind::Symmetric) return Matrix::identity(level, n);
  return dual_pair_gram(kind, level, n / 2);
}

Matrix dual_pair_gram(FormKind kind, Level level, std::size_t half) {
  Matrix g(level, 2 * half, 2 * half);
  const FieldElement s = kind == FormKind::Symmetric ? level->one() : -level->one();
  for (std::size_t i = 0; i < half; ++i) {
    g(i, half + i) = level->one();
    g(half + i, i) = s;
  }
  return g;
}

namespace {

FieldElement bilinear(const Matrix& g, const Matrix& v, const Matrix& w) { return (v.transpose() * g * w)(0, 0); }

std::vector<Matrix> unit_columns(Level l, std::size_t n) {
  std::vector<Matrix> out;
  const Matrix id = Matrix::identity(l, n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(id.column(i));
  return out;
}

}  // namespace

Matrix orthogonal_basis(const Matrix& gram) {
  const Level l = gram.level();
  const std::size_t n = gram.rows();
  std::vector<Matrix> rest = unit_columns(l, n);
  std::vector<Matrix> chosen;
  while (!rest.empty()) {
    std::optional<Matrix> v;
    for (std::size_t i = 0; i < rest.size() && !v; ++i) {
      if (!bilinear(gram, rest[i], rest[i]).is_zero()) {
        v = rest[i];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t i = 0; i < rest.size() && !v; ++i) {
      for (std::size_t j = i + 1; j < rest.size() && !v; ++j) {
        if (!bilinear(gram, rest[i], rest[j]).is_zero()) {
          v = rest[i] + rest[j];
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }
    if (!v) throw Error(ErrorCode::DegeneratePairing, "symmetric form is degenerate");
    const FieldElement inv = bilinear(gram, *v, *v).inverse();
    for (auto& w : rest) w = w - (bilinear(gram, w, *v) * inv) * *v;
    chosen.push_back(*v);
  }
  return Matrix::hcat(l, n, chosen);
}

Matrix symplectic_basis(const Matrix& gram) {
  const Level l = gram.level();
  const std::size_t n = gram.rows();
  std::vector<Matrix> rest = unit_columns(l, n);
  std::vector<Matrix> es, fs;
  while (!rest.empty()) {
    const Matrix e = rest.front();
    std::size_t j = 1;
    while (j < rest.size() && bilinear(gram, e, rest[j]).is_zero()) ++j;
    if (j == rest.size()) throw Error(ErrorCode::DegeneratePairing, "skew form is degenerate");
    const Matrix f = bilinear(gram, e, rest[j]).inverse() * rest[j];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    rest.erase(rest.begin());
    for (auto& w : rest) w = w - bilinear(gram, w, f) * e + bilinear(gram, w, e) * f;
    es.push_back(e);
    fs.push_back(f);
  }
  es.insert(es.end(), fs.begin(), fs.end());
  return Matrix::hcat(l, n, es);
}

Matrix normal_basis(const BilinearSpace& v) {
  if (v.kind() == FormKind::Symplectic) return symplectic_basis(v.gram());
  Matrix p = orthogonal_basis(v.gram());
  const Matrix d = p.transpose() * v.gram() * p;
  Level l = v.level();
  std::vector<FieldElement> scale;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const auto r = sqrt_or_extend(d(i, i).lift(l));
    l = common_level(l, r.level);
    scale.push_back(r.root.inverse());
  }
  for (auto& s : scale) s = s.lift(l);
  return p.lift(l) * Matrix::diagonal(scale);
}

}  // namespace isoconj
