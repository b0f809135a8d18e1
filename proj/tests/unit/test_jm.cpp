#include <algorithm>

#include "doctest.h"
#include "isoconj/error.hpp"
#include "isoconj/jm_sl2.hpp"
#include "random_isometry.hpp"

using namespace isoconj;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Independent oracle: Jordan block sizes of a nilpotent from ranks of its powers.
std::vector<std::size_t> nilpotent_block_sizes(const Matrix& n) {
  const std::size_t dim = n.rows();
  std::vector<std::size_t> r{dim};
  for (std::size_t k = 1; k <= dim + 1; ++k) r.push_back(rank(n.pow(k)));
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k <= dim; ++k) {
    // blocks of size exactly k: r_{k-1} - 2 r_k + r_{k+1}
    const std::size_t count = r[k - 1] + r[k + 1] - 2 * r[k];
    for (std::size_t i = 0; i < count; ++i) sizes.push_back(k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// Weights of h on a summand, read off the diagonal of its restriction.
std::vector<FieldElement> summand_weights(const Sl2Triple& t, const IrreducibleSummand& s) {
  const Matrix r = restrict_operator(t.h, s.space.basis);
  std::vector<FieldElement> w;
  for (std::size_t i = 0; i < r.rows(); ++i) w.push_back(r(i, i));
  return w;
}

void check_decomposition(const Sl2Triple& t, const std::vector<IrreducibleSummand>& parts) {
  const Level l = t.e.level();
  const std::size_t n = t.e.rows();
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims;
  for (const auto& s : parts) {
    CHECK(s.space.dim() == s.highest_weight + 1);
    for (const Matrix* x : {&t.e, &t.h, &t.f}) {
      CHECK_NOTHROW(restrict_operator(*x, s.space.basis));
    }
    const auto w = summand_weights(t, s);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i] == l->from_int(static_cast<std::int64_t>(s.highest_weight) - 2 * static_cast<std::int64_t>(i)));
    }
    CHECK(s.restriction != RestrictionClass::Mixed);
    const bool odd = s.space.dim() % 2 == 1;
    const bool nondeg = s.restriction == RestrictionClass::Nondegenerate;
    CHECK(nondeg == (t.space.kind() == FormKind::Symmetric ? odd : !odd));
    bases.push_back(s.space.basis);
    dims.push_back(s.space.dim());
  }
  const Matrix all = Matrix::hcat(l, n, bases);
  REQUIRE(all.cols() == n);
  CHECK_FALSE(determinant(all).is_zero());
  std::sort(dims.rbegin(), dims.rend());
  CHECK(dims == nilpotent_block_sizes(t.e));
}

// Dimension of the space of bilinear forms M on the summand invariant under e, h, f.
std::size_t invariant_form_dimension(const Sl2Triple& t, const IrreducibleSummand& s) {
  const Level l = t.e.level();
  const std::size_t k = s.space.dim();
  std::vector<Matrix> rows;
  for (const Matrix* x : {&t.e, &t.h, &t.f}) {
    const Matrix r = restrict_operator(*x, s.space.basis);
    // X^T M + M X = 0, one equation per entry, unknowns vec(M)
    Matrix eq(l, k * k, k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 0; i < k; ++i) {
          eq(a * k + b, i * k + b) = eq(a * k + b, i * k + b) + r(i, a);
          eq(a * k + b, a * k + i) = eq(a * k + b, a * k + i) + r(i, b);
        }
      }
    rows.push_back(eq.transpose());
  }
  const Matrix stacked = Matrix::hcat(l, k * k, rows).transpose();
  return kernel(stacked).dim();
}

}  // namespace

TEST_CASE("sym_power_form examples") {
  const Level f7 = make_prime_field(7);
  const Level f5 = make_prime_field(5);
  const auto b1 = sym_power_form(1, f5);
  CHECK(b1.gram() == Matrix::from_ints(f5, {{0, 1}, {-1, 0}}));
  CHECK(b1.kind() == FormKind::Symplectic);
  const auto b2 = sym_power_form(2, f7);
  CHECK(b2.gram() == Matrix::from_ints(f7, {{0, 0, 1}, {0, 3, 0}, {1, 0, 0}}));
  CHECK(b2.kind() == FormKind::Symmetric);
  const auto b3 = sym_power_form(3, f7);
  CHECK(b3.gram() == Matrix::from_ints(f7, {{0, 0, 0, 1}, {0, 0, 2, 0}, {0, 5, 0, 0}, {6, 0, 0, 0}}));
  CHECK(b3.kind() == FormKind::Symplectic);
  CHECK(code_of([&] { sym_power_form(7, f7); }) == ErrorCode::CharacteristicTooSmall);
}

TEST_CASE("sym power models are invariant and parity follows m") {
  const Level f11 = make_prime_field(11);
  for (std::size_t m = 0; m <= 6; ++m) {
    const auto b = sym_power_form(m, f11);
    const Matrix g = b.gram();
    CHECK(g.transpose() == (m % 2 == 0 ? g : -g));
    const auto model = sym_power_model(m, f11);
    CHECK(in_lie_algebra(model.e, b));
    CHECK(in_lie_algebra(model.h, b));
    CHECK(in_lie_algebra(model.f, b));
    CHECK(commutator(model.e, model.f) == model.h);
    CHECK(is_isometry(nilpotent_exp(model.e), b));
    CHECK(is_isometry(nilpotent_exp(model.f), b));
  }
}

TEST_CASE("sl2_triple examples") {
  const Level f5 = make_prime_field(5);
  const auto j = BilinearSpace::from_gram(Matrix::from_ints(f5, {{0, 1}, {-1, 0}}));
  const Matrix n = Matrix::from_ints(f5, {{0, 1}, {0, 0}});
  const auto t = sl2_triple(n, j);
  CHECK(t.e == n);
  CHECK(t.h == Matrix::from_ints(f5, {{1, 0}, {0, -1}}));
  CHECK(t.f == Matrix::from_ints(f5, {{0, 0}, {1, 0}}));

  const Level f7 = make_prime_field(7);
  const auto b2 = sym_power_form(2, f7);
  const Matrix u3 = Matrix::from_ints(f7, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}});
  REQUIRE(is_isometry(u3, b2));
  // U3 - I is not in the Lie algebra (it squares to a nonzero symmetric element); its logarithm is.
  CHECK(code_of([&] { sl2_triple(u3 - Matrix::identity(f7, 3), b2); }) == ErrorCode::NotInLieAlgebra);
  const auto t3 = sl2_triple(unipotent_log(u3), b2);
  CHECK(is_sl2_triple(t3));
  const auto parts = sl2_irreducible_decomposition(t3);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].highest_weight == 2);
  check_decomposition(t3, parts);
  CHECK(nilpotent_exp(t3.e) == u3);

  CHECK(code_of([&] { sl2_triple(Matrix(f5, 2, 2), j); }) == ErrorCode::ZeroNilpotent);
  CHECK(code_of([&] { sl2_triple(Matrix::from_ints(f5, {{1, 0}, {0, -1}}), j); }) == ErrorCode::NotNilpotent);
  const auto id = BilinearSpace::from_gram(Matrix::identity(f5, 2));
  CHECK(code_of([&] { sl2_triple(n, id); }) == ErrorCode::NotInLieAlgebra);
  const auto small = BilinearSpace::from_gram(Matrix::identity(make_prime_field(3), 3));
  CHECK(code_of([&] { sl2_triple(Matrix(small.level(), 3, 3), small); }) == ErrorCode::CharacteristicTooSmall);
}

TEST_CASE("sl2_irreducible_decomposition examples") {
  const Level f5 = make_prime_field(5);
  const auto j = BilinearSpace::from_gram(Matrix::from_ints(f5, {{0, 1}, {-1, 0}}));
  const Matrix n = Matrix::from_ints(f5, {{0, 1}, {0, 0}});
  auto parts = sl2_irreducible_decomposition(sl2_triple(n, j));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].highest_weight == 1);

  const Matrix jj[] = {j.gram(), j.gram()};
  const auto j4 = BilinearSpace::from_gram(Matrix::block_diagonal(f5, jj));
  const Matrix nn[] = {n, n};
  const auto t4 = sl2_triple(Matrix::block_diagonal(f5, nn), j4);
  parts = sl2_irreducible_decomposition(t4);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].highest_weight == 1);
  CHECK(parts[1].highest_weight == 1);
  check_decomposition(t4, parts);
}

TEST_CASE("classify_restriction examples") {
  const Level f5 = make_prime_field(5);
  const auto id2 = BilinearSpace::from_gram(Matrix::identity(f5, 2));
  CHECK(classify_restriction({Matrix::from_ints(f5, {{1}, {2}})}, id2) == RestrictionClass::Zero);
  CHECK(classify_restriction({Matrix::identity(f5, 2)}, id2) == RestrictionClass::Nondegenerate);
  const auto id3 = BilinearSpace::from_gram(Matrix::identity(f5, 3));
  CHECK(classify_restriction({Matrix::from_ints(f5, {{1, 0}, {2, 0}, {0, 1}})}, id3) == RestrictionClass::Mixed);
  CHECK_THROWS_AS(classify_restriction({Matrix::identity(f5, 2)}, id3), Error);
}

TEST_CASE("unipotent_orthogonal_decomposition examples") {
  const Level f5 = make_prime_field(5);
  const auto id2 = BilinearSpace::from_gram(Matrix::identity(f5, 2));
  auto d = unipotent_orthogonal_decomposition(Matrix::identity(f5, 2), id2);
  CHECK(d.indecomposables.size() == 2);
  CHECK(d.standard_pairs.empty());
  for (const auto& u : d.indecomposables) CHECK(u.space.dim() == 1);

  const Level f7 = make_prime_field(7);
  const auto b2 = sym_power_form(2, f7);
  d = unipotent_orthogonal_decomposition(Matrix::from_ints(f7, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}), b2);
  REQUIRE(d.indecomposables.size() == 1);
  CHECK(d.indecomposables[0].space.dim() == 3);
  CHECK(d.standard_pairs.empty());

  // dual-pair Gram [[0, I], [I, 0]] with T = A + A^{-T}, A a 2x2 Jordan block
  const Matrix g = dual_pair_gram(FormKind::Symmetric, f7, 2);
  const auto v = BilinearSpace::from_gram(g);
  const Matrix a = Matrix::from_ints(f7, {{1, 1}, {0, 1}});
  const Matrix blocks[] = {a, inverse(a).transpose()};
  const Matrix t = Matrix::block_diagonal(f7, blocks);
  REQUIRE(is_isometry(t, v));
  d = unipotent_orthogonal_decomposition(t, v);
  CHECK(d.indecomposables.empty());
  REQUIRE(d.standard_pairs.size() == 1);
  CHECK(d.standard_pairs[0].first.space.dim() == 2);
  CHECK(d.standard_pairs[0].second.space.dim() == 2);
  CHECK(d.standard_pairs[0].first.restriction == RestrictionClass::Zero);

  CHECK(code_of([&] { unipotent_orthogonal_decomposition(-Matrix::identity(f5, 2), id2); }) ==
        ErrorCode::NotUnipotent);
}

TEST_CASE("triples and decompositions of random unipotent isometries") {
  std::mt19937_64 rng(99);
  const Level f11 = make_prime_field(11);
  const Level f13 = make_prime_field(13);
  std::vector<BilinearSpace> spaces{
      BilinearSpace::from_gram(canonical_gram(FormKind::Symplectic, f11, 4)),
      BilinearSpace::from_gram(canonical_gram(FormKind::Symplectic, f13, 6)),
      BilinearSpace::from_gram(Matrix::identity(f11, 5)),
      sym_power_form(4, f11),
      sym_power_form(5, f13),
      BilinearSpace::from_gram(dual_pair_gram(FormKind::Symmetric, f11, 3)),
  };
  int checked = 0;
  for (const auto& v : spaces) {
    for (int i = 0; i < 40; ++i) {
      // unipotent isometries as exponentials of random nilpotent Lie elements in a Borel
      const Matrix x = testing::random_isometry(v, rng);
      Matrix n(v.level(), v.dim(), v.dim());
      const Matrix ginv = inverse(v.gram());
      // project a random strictly-upper matrix onto the Lie algebra, conjugated by x
      Matrix up = testing::random_matrix(v.level(), v.dim(), v.dim(), rng);
      for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.dim(); ++c)
          if (c <= r || rng() % 2 == 0) up(r, c) = v.level()->zero();
      n = v.level()->from_int(2).inverse() * (up - ginv * up.transpose() * v.gram());
      if (!is_nilpotent(n)) continue;
      const Matrix e = x * n * inverse(x);
      if (e.is_zero()) continue;
      const Matrix t = nilpotent_exp(e);
      REQUIRE(is_isometry(t, v));
      const auto d = unipotent_orthogonal_decomposition(t, v);
      CHECK(is_sl2_triple(d.triple));
      const auto parts = sl2_irreducible_decomposition(d.triple);
      check_decomposition(d.triple, parts);
      for (const auto& s : parts) CHECK(invariant_form_dimension(d.triple, s) == 1);
      // summands are preserved by exp(e) and exp(f)
      for (const auto& s : parts) {
        CHECK_NOTHROW(restrict_operator(nilpotent_exp(d.triple.e), s.space.basis));
        CHECK_NOTHROW(restrict_operator(nilpotent_exp(d.triple.f), s.space.basis));
      }
      CHECK(is_isometry(nilpotent_exp(d.triple.f), v));
      // pairwise orthogonality of distinct decomposition entries
      std::vector<Matrix> entries;
      for (const auto& u : d.indecomposables) entries.push_back(u.space.basis);
      for (const auto& p : d.standard_pairs) {
        CHECK(p.first.space.dim() == p.second.space.dim());
        const Matrix both[] = {p.first.space.basis, p.second.space.basis};
        entries.push_back(Matrix::hcat(v.level(), v.dim(), both));
      }
      for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b)
          CHECK((entries[a].transpose() * v.gram() * entries[b]).is_zero());
      ++checked;
    }
  }
  CHECK(checked > 100);
}
