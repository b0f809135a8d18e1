#include "isoconj/jm_sl2.hpp"

#include "isoconj/error.hpp"

namespace isoconj {

namespace {

Matrix vstack(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a.transpose(), b.transpose()};
  return Matrix::hcat(a.level(), a.cols(), parts).transpose();
}

Matrix vec(const Matrix& x) {
  Matrix out(x.level(), x.rows() * x.cols(), 1);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i * x.cols() + j, 0) = x(i, j);
  return out;
}

Matrix unvec(const Matrix& v, std::size_t n) {
  Matrix out(v.level(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = v(i * n + j, 0);
  return out;
}

// Coefficient matrix of a linear map on n x n matrices, columns indexed by vec position.
template <typename Map>
Matrix operator_matrix(Level l, std::size_t n, Map&& map) {
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < n * n; ++k) {
    Matrix unit(l, n, n);
    unit(k / n, k % n) = l->one();
    cols.push_back(vec(map(unit)));
  }
  const Matrix probe = map(Matrix(l, n, n));
  return Matrix::hcat(l, probe.rows() * probe.cols(), cols);
}

FieldElement factorial(Level l, std::size_t k) {
  FieldElement r = l->one();
  for (std::size_t i = 2; i <= k; ++i) r = r * l->from_int(static_cast<std::int64_t>(i));
  return r;
}

// GL-level triple from Jordan chains of a nilpotent n.
std::pair<Matrix, Matrix> chain_triple(const Matrix& n) {
  const JordanBasis jb = jordan_basis(n);
  const Level l = jb.basis.level();
  const std::size_t dim = n.rows();
  Matrix h0(l, dim, dim), f0(l, dim, dim);
  std::size_t offset = 0;
  for (const auto& d : jb.divisors.entries) {
    const auto k = static_cast<std::int64_t>(d.size);
    for (std::int64_t j = 1; j <= k; ++j) {
      const std::size_t r = offset + static_cast<std::size_t>(j - 1);
      h0(r, r) = l->from_int(k + 1 - 2 * j);
      if (j < k) f0(r + 1, r) = l->from_int(j * (k - j));
    }
    offset += d.size;
  }
  const Matrix pinv = inverse(jb.basis);
  return {jb.basis * h0 * pinv, jb.basis * f0 * pinv};
}

}  // namespace

bool is_nilpotent(const Matrix& x) { return x.is_square() && x.pow(x.rows()).is_zero(); }

bool is_unipotent(const Matrix& t) {
  return t.is_square() && is_nilpotent(t - Matrix::identity(t.level(), t.rows()));
}

Matrix nilpotent_exp(const Matrix& x) {
  const Level l = x.level();
  const std::size_t n = x.rows();
  Matrix term = Matrix::identity(l, n);
  Matrix acc = term;
  for (std::size_t k = 1; k < n; ++k) {
    term = l->from_int(static_cast<std::int64_t>(k)).inverse() * (term * x);
    acc = acc + term;
  }
  return acc;
}

Matrix unipotent_log(const Matrix& t) {
  const Level l = t.level();
  const std::size_t n = t.rows();
  const Matrix nil = t - Matrix::identity(l, n);
  Matrix power = Matrix::identity(l, n);
  Matrix acc(l, n, n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    const FieldElement c = l->from_int(k % 2 == 1 ? 1 : -1) / l->from_int(static_cast<std::int64_t>(k));
    acc = acc + c * power;
  }
  return acc;
}

Sl2Triple sl2_triple(const Matrix& n, const BilinearSpace& v) {
  require_characteristic_gate(v);
  if (!n.is_square() || n.rows() != v.dim()) throw Error(ErrorCode::ShapeError, "operator dimension mismatch");
  if (n.is_zero()) throw Error(ErrorCode::ZeroNilpotent, "zero nilpotent has no sl2-triple");
  if (!is_nilpotent(n)) throw Error(ErrorCode::NotNilpotent, "operator is not nilpotent");
  if (!in_lie_algebra(n, v)) throw Error(ErrorCode::NotInLieAlgebra, "operator is not in the Lie algebra of the form");

  const Level l = common_level(n.level(), v.level());
  const std::size_t dim = n.rows();
  const Matrix e = n.lift(l);
  const Matrix g = v.gram().lift(l);
  const Matrix ginv = inverse(g);

  // Average the chain h with its adjoint image to land in the Lie algebra.
  const Matrix h0 = chain_triple(e).first;
  const Matrix h = l->from_int(2).inverse() * (h0 - ginv * h0.transpose() * g);

  // f in the Lie algebra with [e, f] = h and [h, f] = -2f.
  const Matrix lie = operator_matrix(l, dim, [&](const Matrix& x) { return x.transpose() * g + g * x; });
  const Matrix ad_e = operator_matrix(l, dim, [&](const Matrix& x) { return commutator(e, x); });
  const Matrix ad_h = operator_matrix(l, dim, [&](const Matrix& x) { return commutator(h, x) + l->from_int(2) * x; });
  const Matrix rhs_parts[] = {Matrix(l, dim * dim, 1), vec(h), Matrix(l, dim * dim, 1)};
  const Matrix lhs = vstack(vstack(lie, ad_e), ad_h);
  const Matrix rhs = vstack(vstack(rhs_parts[0], rhs_parts[1]), rhs_parts[2]);
  const auto sol = solve(lhs, rhs);
  if (!sol) throw Error(ErrorCode::Internal, "no f completes the sl2-triple");
  Sl2Triple out{e, h, unvec(*sol, dim), v.lift(l)};
  if (!is_sl2_triple(out)) throw Error(ErrorCode::Internal, "constructed triple fails the bracket relations");
  return out;
}

bool is_sl2_triple(const Sl2Triple& t) {
  const FieldElement two = t.e.level()->from_int(2);
  return commutator(t.h, t.e) == two * t.e && commutator(t.h, t.f) == -(two * t.f) && commutator(t.e, t.f) == t.h &&
         in_lie_algebra(t.e, t.space) && in_lie_algebra(t.h, t.space) && in_lie_algebra(t.f, t.space);
}

std::string_view to_string(RestrictionClass c) {
  switch (c) {
    case RestrictionClass::Zero: return "zero";
    case RestrictionClass::Nondegenerate: return "nondegenerate";
    case RestrictionClass::Mixed: return "mixed";
  }
  return "unknown";
}

RestrictionClass classify_restriction(const Subspace& w, const BilinearSpace& v) {
  if (w.ambient() != v.dim()) throw Error(ErrorCode::ShapeError, "subspace does not live in this space");
  const Matrix g = v.restricted_gram(w.basis);
  if (g.is_zero()) return RestrictionClass::Zero;
  if (!determinant(g).is_zero()) return RestrictionClass::Nondegenerate;
  return RestrictionClass::Mixed;
}

std::vector<IrreducibleSummand> sl2_irreducible_decomposition(const Sl2Triple& t) {
  const Level l = t.e.level();
  const std::size_t n = t.e.rows();
  const Matrix g = t.space.gram().lift(l);
  const Matrix id = Matrix::identity(l, n);
  std::vector<IrreducibleSummand> out;
  for (std::size_t m = n; m-- > 0;) {
    const Subspace hw = kernel(vstack(t.e, t.h - l->from_int(static_cast<std::int64_t>(m)) * id));
    if (hw.dim() == 0) continue;
    const Matrix fm = t.f.pow(m);
    // beta(v, w) = B(v, f^m w) on highest weight vectors is symmetric iff sign * (-1)^m = 1
    const Matrix beta = hw.basis.transpose() * g * fm * hw.basis;
    const bool symmetric = (m % 2 == 0) == (t.space.kind() == FormKind::Symmetric);
    const Matrix adapted = hw.basis * (symmetric ? orthogonal_basis(beta) : symplectic_basis(beta));
    for (std::size_t c = 0; c < adapted.cols(); ++c) {
      std::vector<Matrix> chain{adapted.column(c)};
      for (std::size_t k = 0; k < m; ++k) chain.push_back(t.f * chain.back());
      Subspace w{Matrix::hcat(l, n, chain)};
      const RestrictionClass rc = classify_restriction(w, t.space);
      out.push_back({std::move(w), m, rc});
    }
  }
  return out;
}

BilinearSpace sym_power_form(std::size_t m, Level level) {
  if (level->characteristic() <= m) {
    throw Error(ErrorCode::CharacteristicTooSmall, "Sym^m form needs p > m");
  }
  Matrix g(level, m + 1, m + 1);
  const FieldElement mf = factorial(level, m).inverse();
  for (std::size_t i = 0; i <= m; ++i) {
    const FieldElement v = factorial(level, i) * factorial(level, m - i) * mf;
    g(i, m - i) = i % 2 == 0 ? v : -v;
  }
  if (level->characteristic() == 2) return BilinearSpace::from_gram(std::move(g));
  return BilinearSpace(std::move(g), m % 2 == 0 ? FormKind::Symmetric : FormKind::Symplectic);
}

SymPowerModel sym_power_model(std::size_t m, Level level) {
  const std::size_t n = m + 1;
  SymPowerModel out{Matrix(level, n, n), Matrix(level, n, n), Matrix(level, n, n)};
  const auto mi = static_cast<std::int64_t>(m);
  for (std::size_t i = 0; i <= m; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    if (i > 0) out.e(i - 1, i) = level->from_int(ii);
    if (i < m) out.f(i + 1, i) = level->from_int(mi - ii);
    out.h(i, i) = level->from_int(mi - 2 * ii);
  }
  return out;
}

UnipotentOrthogonalDecomposition unipotent_orthogonal_decomposition(const Matrix& t, const BilinearSpace& v) {
  require_characteristic_gate(v);
  require_isometry(t, v);
  if (!is_unipotent(t)) throw Error(ErrorCode::NotUnipotent, "operator is not unipotent");
  const Level l = common_level(t.level(), v.level());
  const Matrix e = unipotent_log(t.lift(l));
  Sl2Triple triple = e.is_zero() ? Sl2Triple{e, e, e, v.lift(l)} : sl2_triple(e, v);

  UnipotentOrthogonalDecomposition out{std::move(triple), {}, {}};
  std::vector<IrreducibleSummand> isotropic;
  for (auto& s : sl2_irreducible_decomposition(out.triple)) {
    if (s.restriction == RestrictionClass::Nondegenerate) {
      out.indecomposables.push_back(std::move(s));
    } else if (s.restriction == RestrictionClass::Zero) {
      isotropic.push_back(std::move(s));
    } else {
      throw Error(ErrorCode::Internal, "irreducible summand with mixed restriction");
    }
  }
  const Matrix g = out.triple.space.gram();
  std::vector<bool> used(isotropic.size(), false);
  for (std::size_t i = 0; i < isotropic.size(); ++i) {
    if (used[i]) continue;
    std::size_t j = i + 1;
    for (; j < isotropic.size(); ++j) {
      if (used[j] || isotropic[j].space.dim() != isotropic[i].space.dim()) continue;
      if (!determinant(isotropic[i].space.basis.transpose() * g * isotropic[j].space.basis).is_zero()) break;
    }
    if (j == isotropic.size()) throw Error(ErrorCode::Internal, "isotropic summand has no partner");
    used[i] = used[j] = true;
    out.standard_pairs.push_back({isotropic[i], isotropic[j]});
  }
  return out;
}

}  // namespace isoconj
