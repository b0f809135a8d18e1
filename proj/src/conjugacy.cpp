#include "isoconj/conjugacy.hpp"

#include "isoconj/error.hpp"
#include "isoconj/tower.hpp"

namespace isoconj {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1Standard: return "case1-standard";
    case CaseTag::Case2Unipotent: return "case2-unipotent";
    case CaseTag::Case3Negative: return "case3-negative";
    case CaseTag::MixedSplit: return "mixed-split";
  }
  return "unknown";
}

namespace {

// Matched frames of an S-block and a T-block with equal Gram, and the
// coordinate witness x with x t x^-1 = s and x^T gram x = gram.
struct Piece {
  Matrix frame_s;
  Matrix frame_t;
  Matrix x;
};

enum class BlockKind { Indecomposable, Pair };

struct Block {
  BlockKind kind;
  Matrix frame;  // columns in the coordinates of the space
  Matrix op;     // frame^-1 T frame
  Matrix gram;   // canonical Gram of the frame
};

Matrix top_left(const Matrix& m, std::size_t k) {
  Matrix out(m.level(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
  return out;
}

// Unipotent T on V into indecomposables (normalized to the canonical Gram)
// and dual pairs (normalized to the dual-pair Gram). `top` only grows.
std::vector<Block> unipotent_blocks(const Matrix& t, const BilinearSpace& v, Level& top) {
  const auto d = unipotent_orthogonal_decomposition(t, v);
  std::vector<Block> out;
  for (const auto& u : d.indecomposables) {
    const Matrix g = v.restricted_gram(u.space.basis).lift(top);
    const Matrix q = normal_basis(BilinearSpace(g, v.kind()));
    top = common_level(top, q.level());
    const Matrix frame = u.space.basis.lift(top) * q;
    out.push_back({BlockKind::Indecomposable, frame, restrict_operator(t.lift(top), frame),
                   canonical_gram(v.kind(), top, frame.cols())});
  }
  for (const auto& p : d.standard_pairs) {
    const Matrix frame = standard_pair_basis(v, p.first.space, p.second.space).frame().lift(top);
    out.push_back({BlockKind::Pair, frame, restrict_operator(t.lift(top), frame),
                   dual_pair_gram(v.kind(), top, frame.cols() / 2)});
  }
  return out;
}

// Scalar c with m = c * g, for g non-zero.
FieldElement proportionality(const Matrix& m, const Matrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j).is_zero()) continue;
      const FieldElement c = m(i, j) / g(i, j);
      if (!(m == c * g)) throw Error(ErrorCode::Internal, "pulled-back form is not a multiple of the original");
      return c;
    }
  throw Error(ErrorCode::Internal, "zero Gram block");
}

std::vector<Piece> unipotent_pieces(const Matrix& s, const BilinearSpace& vs, const Matrix& t,
                                    const BilinearSpace& vt, Level& top) {
  const auto bs = unipotent_blocks(s, vs, top);
  auto bt = unipotent_blocks(t, vt, top);
  std::vector<bool> used(bt.size(), false);
  std::vector<Piece> out;
  for (const auto& a : bs) {
    std::size_t j = 0;
    while (j < bt.size() && (used[j] || bt[j].kind != a.kind || bt[j].frame.cols() != a.frame.cols())) ++j;
    if (j == bt.size()) throw Error(ErrorCode::DivisorMismatch, "no matching summand for a unipotent block");
    used[j] = true;
    const Block& b = bt[j];
    const Matrix as = a.op.lift(top), at = b.op.lift(top);
    if (a.kind == BlockKind::Indecomposable) {
      const auto x = gl_conjugacy_witness(as, at);
      if (!x) throw Error(ErrorCode::DivisorMismatch, "indecomposable blocks are not similar");
      const Matrix gram = a.gram.lift(top);
      // x^T C x = c C; rescale by 1/sqrt(c)
      const FieldElement c = proportionality(x->transpose() * gram * *x, gram);
      const auto r = sqrt_or_extend(c.lift(top));
      top = common_level(top, r.level);
      out.push_back({a.frame, b.frame, r.root.lift(top).inverse() * x->lift(top)});
    } else {
      const std::size_t half = as.rows() / 2;
      out.push_back({a.frame, b.frame, case1_witness(top_left(as, half), top_left(at, half))});
    }
  }
  return out;
}

Matrix assemble(const std::vector<Piece>& pieces, std::size_t n, Level top) {
  std::vector<Matrix> fs, ft, xs;
  for (const auto& p : pieces) {
    fs.push_back(p.frame_s.lift(top));
    ft.push_back(p.frame_t.lift(top));
    xs.push_back(p.x.lift(top));
  }
  return Matrix::hcat(top, n, fs) * Matrix::block_diagonal(top, xs) * inverse(Matrix::hcat(top, n, ft));
}

void check_witness(const Matrix& c, const Matrix& s, const Matrix& t, const BilinearSpace& v) {
  const Level l = c.level();
  if (!(c * t.lift(l) == s.lift(l) * c) || !is_isometry(c, v.lift(l))) {
    throw Error(ErrorCode::Internal, "constructed witness fails verification");
  }
}

void require_same_divisors(const Matrix& s, const Matrix& t) {
  if (!(elementary_divisors(s) == elementary_divisors(t))) {
    throw Error(ErrorCode::DivisorMismatch, "elementary divisors differ");
  }
}

std::string dim_label(std::size_t d) { return "dim " + std::to_string(d); }

}  // namespace

Matrix dual_pair_map(const Matrix& x) {
  const Matrix blocks[] = {x, inverse(x).transpose()};
  return Matrix::block_diagonal(x.level(), blocks);
}

Matrix case1_witness(const Matrix& sl, const Matrix& tl) {
  const auto x = gl_conjugacy_witness(sl, tl);
  if (!x) throw Error(ErrorCode::DivisorMismatch, "restrictions to the eigen-block are not similar");
  return dual_pair_map(*x);
}

Matrix case2_witness(const Matrix& s, const Matrix& t, const BilinearSpace& v) {
  require_characteristic_gate(v);
  require_isometry(s, v);
  require_isometry(t, v);
  require_same_divisors(s, t);
  if (!is_unipotent(s)) throw Error(ErrorCode::NotUnipotent, "operator is not unipotent");
  Level top = common_level(common_level(s.level(), t.level()), v.level());
  const auto pieces = unipotent_pieces(s, v, t, v, top);
  const Matrix c = assemble(pieces, v.dim(), top);
  check_witness(c, s, t, v);
  return c;
}

Matrix case3_reduce(const Matrix& s, const Matrix& t, const BilinearSpace& v) { return case2_witness(-s, -t, v); }

ConjugacyVerdict isometry_conjugacy(const Matrix& s, const Matrix& t, const BilinearSpace& v) {
  require_characteristic_gate(v);
  require_isometry(s, v);
  require_isometry(t, v);
  ConjugacyVerdict out;
  out.divisors_s = elementary_divisors(s);
  out.divisors_t = elementary_divisors(t);
  out.level = common_level(common_level(s.level(), t.level()), v.level());
  out.conjugate = out.divisors_s == out.divisors_t;
  if (!out.conjugate) return out;
  if (s == t) {
    out.witness = Matrix::identity(out.level, v.dim());
    return out;
  }

  const auto ps = primary_decomposition(s, v);
  const auto pt = primary_decomposition(t, v);
  Level top = common_level(ps.level, pt.level);
  const BilinearSpace vl = v.lift(top);
  const Matrix sl = s.lift(top), tl = t.lift(top);
  const std::size_t n = v.dim();

  std::vector<Piece> pieces;
  auto embed = [&](std::vector<Piece> local, const Matrix& bs, const Matrix& bt) {
    for (auto& p : local) pieces.push_back({bs.lift(top) * p.frame_s.lift(top), bt.lift(top) * p.frame_t.lift(top), p.x});
  };
  auto eigen_part = [&](const PrimaryPart& a, const PrimaryPart& b, bool negate, CaseTag tag, const char* name) {
    if (a.space.dim() == 0) return;
    if (a.space.dim() != b.space.dim()) throw Error(ErrorCode::Internal, "primary components differ in dimension");
    const BilinearSpace va(a.gram.lift(top), v.kind()), vb(b.gram.lift(top), v.kind());
    Matrix ra = restrict_operator(sl, a.space.basis.lift(top));
    Matrix rb = restrict_operator(tl, b.space.basis.lift(top));
    if (negate) {
      ra = -ra;
      rb = -rb;
    }
    embed(unipotent_pieces(ra, va, rb, vb, top), a.space.basis, b.space.basis);
    out.case_trace.push_back({std::string(name) + " (" + dim_label(a.space.dim()) + ")", tag});
  };

  const std::size_t components =
      (ps.plus.space.dim() > 0) + (ps.minus.space.dim() > 0) + ps.standard.size();
  if (components > 1) out.case_trace.push_back({"V (" + dim_label(n) + ")", CaseTag::MixedSplit});
  eigen_part(ps.plus, pt.plus, false, CaseTag::Case2Unipotent, "V_1");
  eigen_part(ps.minus, pt.minus, true, CaseTag::Case3Negative, "V_-1");

  if (ps.standard.size() != pt.standard.size()) throw Error(ErrorCode::Internal, "standard components differ");
  for (std::size_t i = 0; i < ps.standard.size(); ++i) {
    const auto& a = ps.standard[i];
    const auto& b = pt.standard[i];
    if (!(a.lambda == b.lambda)) throw Error(ErrorCode::Internal, "standard components differ in eigenvalue");
    const auto fa = standard_pair_basis(vl, a.v_lambda, a.v_lambda_inv).frame();
    const auto fb = standard_pair_basis(vl, b.v_lambda, b.v_lambda_inv).frame();
    const std::size_t half = a.v_lambda.dim();
    const Matrix x = case1_witness(top_left(restrict_operator(sl, fa), half), top_left(restrict_operator(tl, fb), half));
    pieces.push_back({fa, fb, x});
    out.case_trace.push_back({"V_" + a.lambda.to_string() + " + V_" + a.lambda_inv.to_string() + " (" +
                                  dim_label(2 * half) + ")",
                              CaseTag::Case1Standard});
  }

  const Matrix c = assemble(pieces, n, top);
  check_witness(c, s, t, v);
  out.witness = c.minimal();
  out.level = common_level(out.witness->level(), out.level);
  if (out.witness->level() != out.level) out.witness = out.witness->lift(out.level);
  return out;
}

}  // namespace isoconj
