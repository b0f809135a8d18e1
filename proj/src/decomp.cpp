#include "isoconj/decomp.hpp"

#include <algorithm>

#include "isoconj/error.hpp"

namespace isoconj {

namespace {

Matrix to_level(const Matrix& m, Level target) {
  if (auto d = m.descend(target)) return *d;
  return m;
}

Polynomial to_level(const Polynomial& p, Level target) {
  if (auto d = p.descend(target)) return *d;
  return p;
}

}  // namespace

JordanPair multiplicative_jordan(const Matrix& t, const BilinearSpace& v) {
  require_characteristic_gate(v);
  require_isometry(t, v);
  const Spectrum sp = spectrum(t);
  const Level l = sp.split.level;
  const Polynomial chi = sp.characteristic.lift(l);

  // CRT: p_s = lambda_i mod (x - lambda_i)^m_i
  Polynomial ps(l);
  for (const auto& [lambda, mult] : sp.split.roots) {
    const Polynomial local = pow(Polynomial::linear(lambda), static_cast<std::uint64_t>(mult));
    const Polynomial cofactor = exact_div(chi, local);
    ps = ps + lambda * (cofactor * inverse_mod(cofactor, local));
  }
  ps = mod(ps, chi);
  const Polynomial pu = mod(Polynomial::x(l) * inverse_mod(ps, chi), chi);

  const Matrix tl = t.lift(l);
  JordanPair out{to_level(evaluate(ps, tl), t.level()), to_level(evaluate(pu, tl), t.level()),
                 to_level(ps, t.level()), to_level(pu, t.level())};
  return out;
}

PrimaryDecomposition primary_decomposition(const Matrix& t, const BilinearSpace& v) {
  require_isometry(t, v);
  const SelfDualSplit split = self_dual_split(characteristic_polynomial(t));
  const Level l = split.root_level;
  const Matrix tl = t.lift(l);
  const BilinearSpace vl = v.lift(l);
  const FieldElement one = l->one();

  auto part = [&](const FieldElement& lambda, int mult) {
    PrimaryPart p{mult > 0 ? generalized_eigenspace(tl, lambda) : Subspace{Matrix(l, v.dim(), 0)},
                  Matrix(l, 0, 0)};
    p.gram = vl.restricted_gram(p.space.basis);
    return p;
  };

  PrimaryDecomposition out{l, part(one, split.l), part(-one, split.m), {}};
  for (const auto& pr : split.pairs) {
    StandardPart s{pr.lambda, pr.lambda_inv, generalized_eigenspace(tl, pr.lambda),
                   generalized_eigenspace(tl, pr.lambda_inv), Matrix(l, 0, 0)};
    const Matrix parts[] = {s.v_lambda.basis, s.v_lambda_inv.basis};
    s.gram = vl.restricted_gram(Matrix::hcat(l, v.dim(), parts));
    out.standard.push_back(std::move(s));
  }
  std::sort(out.standard.begin(), out.standard.end(),
            [](const StandardPart& a, const StandardPart& b) { return canonical_less(a.lambda, b.lambda); });
  return out;
}

}  // namespace isoconj
