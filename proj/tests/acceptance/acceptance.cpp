// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Run with --update-golden to rewrite the CLI goldens.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cli.hpp"
#include "isoconj/conjugacy.hpp"
#include "isoconj/decomp.hpp"
#include "isoconj/error.hpp"
#include "isoconj/io.hpp"
#include "isoconj/jm_sl2.hpp"
#include "isoconj/oracle.hpp"
#include "isoconj/tower.hpp"
#include "random_isometry.hpp"

using namespace isoconj;

namespace {

const std::filesystem::path kData = ISOCONJ_TEST_DATA;
const std::string kCli = ISOCONJ_CLI_PATH;
bool g_update_golden = false;

struct Report {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string key(const ElementaryDivisorSet& d) { return to_json(d).dump(); }

bool witness_ok(const Matrix& s, const Matrix& t, const BilinearSpace& v, const Matrix& c) {
  const Matrix g = v.gram();
  return !determinant(c).is_zero() && c * t == s * c && c.transpose() * g * c == g;
}

BilinearSpace symplectic(Level l, std::size_t n) {
  return BilinearSpace::from_gram(canonical_gram(FormKind::Symplectic, l, n));
}

// Verdict equals divisor-set equality, and a returned witness satisfies both equations.
void check_pair(Report& r, const Matrix& s, const Matrix& t, const BilinearSpace& v, int& conjugate_count) {
  const auto verdict = isometry_conjugacy(s, t, v);
  const bool same = elementary_divisors(s) == elementary_divisors(t);
  r.expect(verdict.conjugate == same, "verdict differs from divisor equality for S=" + s.to_string() +
                                          " T=" + t.to_string());
  if (verdict.conjugate) {
    ++conjugate_count;
    r.expect(verdict.witness.has_value() && witness_ok(s, t, v, *verdict.witness),
             "bad witness for S=" + s.to_string() + " T=" + t.to_string());
  } else {
    r.expect(!verdict.witness.has_value(), "witness returned for a non-conjugate pair");
  }
}

// ---------------------------------------------------------------------------

void criterion_1(Report& r) {
  std::mt19937_64 rng(101);
  for (std::uint64_t p : {3, 5}) {
    const Level l = make_prime_field(p);
    const auto v = symplectic(l, 2);
    const auto group = enumerate_isometries(v);
    r.expect(group.size() == p * (p * p - 1), "Sp(2," + std::to_string(p) + ") has the wrong order");

    int conj = 0;
    for (const auto& s : group)
      for (const auto& t : group) check_pair(r, s, t, v, conj);

    // Stratify pairs by (divisor set of S, divisor set of T).
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < group.size(); ++i) classes[key(elementary_divisors(group[i]))].push_back(i);
    std::vector<std::pair<const std::vector<std::size_t>*, const std::vector<std::size_t>*>> same, cross;
    for (const auto& [ka, a] : classes)
      for (const auto& [kb, b] : classes) (ka == kb ? same : cross).emplace_back(&a, &b);

    const Level quad = extend(l, 2);
    std::size_t sampled = 0, agreed = 0;
    auto sample = [&](const auto& strata, std::size_t want) {
      for (std::size_t i = 0; i < std::max(want, strata.size()); ++i) {
        const auto& [a, b] = strata[i % strata.size()];
        const Matrix& s = group[(*a)[rng() % a->size()]];
        const Matrix& t = group[(*b)[rng() % b->size()]];
        const auto oracle = brute_force_conjugate(s, t, v, quad);
        const auto verdict = isometry_conjugacy(s, t, v);
        ++sampled;
        if (oracle.has_value() == verdict.conjugate && (!oracle || witness_ok(s, t, v, *oracle))) ++agreed;
      }
    };
    sample(same, 100);
    sample(cross, 100);
    r.expect(sampled >= 200, "fewer than 200 oracle samples");
    r.expect(agreed == sampled, "oracle disagreement over GF(" + std::to_string(p) + "^2)");
    r.detail << "Sp(2," << p << "): " << group.size() * group.size() << " pairs, " << conj << " conjugate, "
             << agreed << "/" << sampled << " oracle-confirmed; ";
  }
}

void criterion_2(Report& r) {
  const Level f5 = make_prime_field(5);
  const auto o2 = BilinearSpace::from_gram(Matrix::identity(f5, 2));
  const auto g2 = enumerate_isometries(o2);
  r.expect(g2.size() == 8, "O(2,5) should have 8 elements");
  int conj = 0;
  for (const auto& s : g2)
    for (const auto& t : g2) check_pair(r, s, t, o2, conj);
  r.detail << "O(2,5): " << g2.size() * g2.size() << " pairs, " << conj << " conjugate; ";

  // O(3,7) elements as products of embedded O(2,7) blocks and diagonal sign maps.
  const Level f7 = make_prime_field(7);
  const auto o3 = BilinearSpace::from_gram(Matrix::identity(f7, 3));
  const auto blocks = enumerate_isometries(BilinearSpace::from_gram(Matrix::identity(f7, 2)));
  std::vector<Matrix> gens;
  const std::array<std::array<std::size_t, 2>, 3> slots{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& b : blocks)
    for (const auto& [i, j] : slots) {
      Matrix g = Matrix::identity(f7, 3);
      g(i, i) = b(0, 0), g(i, j) = b(0, 1), g(j, i) = b(1, 0), g(j, j) = b(1, 1);
      gens.push_back(g);
    }
  for (int mask = 0; mask < 8; ++mask) {
    Matrix d = Matrix::identity(f7, 3);
    for (int k = 0; k < 3; ++k)
      if (mask & (1 << k)) d(k, k) = -d(k, k);
    gens.push_back(d);
  }
  std::mt19937_64 rng(202);
  auto random_element = [&] {
    Matrix x = Matrix::identity(f7, 3);
    for (int k = 0, n = 1 + static_cast<int>(rng() % 4); k < n; ++k) x = x * gens[rng() % gens.size()];
    return x;
  };
  std::vector<Matrix> elems;
  for (int i = 0; i < 120; ++i) elems.push_back(random_element());
  int pairs = 0;
  conj = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    r.expect(is_isometry(elems[i], o3), "generated element is not an isometry");
    const Matrix g = random_element();
    check_pair(r, g * elems[i] * inverse(g), elems[i], o3, conj);
    check_pair(r, elems[i], elems[(i + 1) % elems.size()], o3, conj);
    pairs += 2;
  }
  r.detail << "O(3,7): " << elems.size() << " isometries, " << pairs << " pairs, " << conj << " conjugate";
}

void criterion_3(Report& r) {
  const Level f11 = make_prime_field(11);
  auto fact = [&](std::size_t n) {
    FieldElement x = f11->one();
    for (std::size_t k = 2; k <= n; ++k) x *= f11->from_int(static_cast<std::int64_t>(k));
    return x;
  };
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto b = sym_power_form(m, f11);
    const Matrix& g = b.gram();
    r.expect(g.rows() == m + 1, "wrong size for m=" + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j <= m; ++j) {
        if (i + j != m) {
          r.expect(g(i, j).is_zero(), "entry off the anti-diagonal for m=" + std::to_string(m));
          continue;
        }
        FieldElement want = fact(i) * fact(m - i) / fact(m);
        if (i % 2 == 1) want = -want;
        r.expect(g(i, j) == want, "closed form mismatch at m=" + std::to_string(m) + " i=" + std::to_string(i));
      }
    const FormKind kind = m % 2 == 0 ? FormKind::Symmetric : FormKind::Symplectic;
    r.expect(b.kind() == kind, "kind does not follow the parity of m=" + std::to_string(m));
  }
  r.detail << "m = 1..6 over GF(11)";
}

// Triples produced by criterion 4, reused for the parity law.
std::vector<Sl2Triple> g_triples;

void check_triple(Report& r, const Matrix& t, const BilinearSpace& v) {
  const Level l = t.level();
  const Matrix id = Matrix::identity(l, t.rows());
  const Matrix e = unipotent_log(t);
  const Sl2Triple tr = sl2_triple(e, v);
  const FieldElement two = l->from_int(2);
  r.expect(commutator(tr.h, tr.e) == two * tr.e, "[h,e] != 2e");
  r.expect(commutator(tr.h, tr.f) == -(two * tr.f), "[h,f] != -2f");
  r.expect(commutator(tr.e, tr.f) == tr.h, "[e,f] != h");
  r.expect(in_lie_algebra(tr.e, v) && in_lie_algebra(tr.h, v) && in_lie_algebra(tr.f, v), "triple leaves the Lie algebra");
  const Matrix x = nilpotent_exp(tr.e);
  r.expect(is_isometry(x, v), "exp(e) is not an isometry");
  r.expect(x == t, "exp(e) does not reproduce T");
  if ((t - id).pow(2).is_zero()) r.expect(tr.e == t - id, "e differs from T - I although (T - I)^2 = 0");
  g_triples.push_back(tr);
}

void criterion_4(Report& r) {
  g_triples.clear();
  const Level f5 = make_prime_field(5);
  const auto sp2 = symplectic(f5, 2);
  int unipotents = 0, identities = 0;
  for (const auto& t : enumerate_isometries(sp2)) {
    if (!is_unipotent(t)) continue;
    ++unipotents;
    if (t.is_identity()) {
      ++identities;
      const Matrix zero = unipotent_log(t);
      r.expect(zero.is_zero() && nilpotent_exp(zero) == t, "log of the identity is not zero");
      r.expect(code_of([&] { sl2_triple(zero, sp2); }) == ErrorCode::ZeroNilpotent,
               "identity should report ZeroNilpotent");
      continue;
    }
    check_triple(r, t, sp2);
  }
  r.expect(unipotents == 25, "Sp(2,5) should have 25 unipotent elements");

  // Dimension 3-4: exp of model nilpotents on B_2, B_3, sums of B_1 and B_0 + B_2,
  // and standard pairs diag(A, A^-T), each conjugated by a random isometry.
  std::mt19937_64 rng(404);
  std::vector<std::pair<BilinearSpace, Matrix>> cases;
  for (std::uint64_t p : {7, 11, 13}) {
    const Level l = make_prime_field(p);
    const auto m2 = sym_power_model(2, l);
    const auto m3 = sym_power_model(3, l);
    const auto m1 = sym_power_model(1, l);
    const auto b2 = sym_power_form(2, l);
    const auto b3 = sym_power_form(3, l);
    const Matrix b1s[] = {sym_power_form(1, l).gram(), sym_power_form(1, l).gram()};
    const auto b11 = BilinearSpace::from_gram(Matrix::block_diagonal(l, b1s));
    const Matrix b02g[] = {Matrix::identity(l, 1), b2.gram()};
    const auto b02 = BilinearSpace::from_gram(Matrix::block_diagonal(l, b02g));
    const auto pair_sym = BilinearSpace::from_gram(dual_pair_gram(FormKind::Symmetric, l, 2));
    const auto pair_alt = BilinearSpace::from_gram(dual_pair_gram(FormKind::Symplectic, l, 2));
    for (int k = 1; k <= 2; ++k) {
      const FieldElement c = l->from_int(k);
      cases.emplace_back(b2, nilpotent_exp(c * m2.e));
      cases.emplace_back(b3, nilpotent_exp(c * m3.e));
      cases.emplace_back(b3, nilpotent_exp(c * m3.e * m3.e * m3.e));
      const Matrix n11[] = {c * m1.e, m1.e};
      cases.emplace_back(b11, nilpotent_exp(Matrix::block_diagonal(l, n11)));
      const Matrix n02[] = {Matrix(l, 1, 1), c * m2.e};
      cases.emplace_back(b02, nilpotent_exp(Matrix::block_diagonal(l, n02)));
      const Matrix a = Matrix::from_ints(l, {{1, k}, {0, 1}});
      const Matrix dp[] = {a, inverse(a).transpose()};
      cases.emplace_back(pair_sym, Matrix::block_diagonal(l, dp));
      cases.emplace_back(pair_alt, Matrix::block_diagonal(l, dp));
    }
  }
  int built = 0;
  for (auto& [v, t0] : cases) {
    const Matrix g = testing::random_isometry(v, rng, 4);
    const Matrix t = g * t0 * inverse(g);
    r.expect(is_isometry(t, v) && is_unipotent(t) && !t.is_identity(), "bad test operator");
    check_triple(r, t, v);
    ++built;
  }
  r.expect(built >= 20, "fewer than 20 dimension 3-4 cases");
  r.detail << unipotents << " Sp(2,5) unipotents (" << identities << " identity -> ZeroNilpotent), " << built
           << " dim 3-4 operators";
}

void criterion_5(Report& r) {
  int summands = 0;
  for (const auto& tr : g_triples) {
    for (const auto& s : sl2_irreducible_decomposition(tr)) {
      ++summands;
      const RestrictionClass cls = classify_restriction(s.space, tr.space);
      const std::size_t rk = rank(tr.space.restricted_gram(s.space.basis));
      r.expect(cls != RestrictionClass::Mixed, "mixed summand");
      r.expect((cls == RestrictionClass::Nondegenerate) == (rk == s.space.dim()) &&
                   (cls == RestrictionClass::Zero) == (rk == 0),
               "classification disagrees with the restricted Gram rank");
      const bool odd = s.space.dim() % 2 == 1;
      const bool expect_nondeg = tr.space.kind() == FormKind::Symmetric ? odd : !odd;
      r.expect((cls == RestrictionClass::Nondegenerate) == expect_nondeg, "parity law violated");
    }
  }
  r.expect(summands > 0, "no summands");
  r.detail << summands << " summands over " << g_triples.size() << " triples";
}

// Sp(4,7) operators built block-wise, conjugated by random symplectic maps.
std::vector<Matrix> g_sp4;

void build_sp4_corpus() {
  if (!g_sp4.empty()) return;
  const Level f7 = make_prime_field(7);
  const auto v = symplectic(f7, 4);
  const auto sp2 = enumerate_isometries(symplectic(f7, 2));
  std::mt19937_64 rng(606);
  const Matrix gl = canonical_gram(FormKind::Symplectic, f7, 4);
  // canonical basis order is (e1, e2, f1, f2); the planes <e1,f1>, <e2,f2> are hyperbolic
  auto embed = [&](const Matrix& a, const Matrix& b) {
    Matrix x(f7, 4, 4);
    const std::size_t p0[] = {0, 2}, p1[] = {1, 3};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        x(p0[i], p0[j]) = a(i, j);
        x(p1[i], p1[j]) = b(i, j);
      }
    return x;
  };
  while (g_sp4.size() < 120) {
    Matrix t(f7, 4, 4);
    if (g_sp4.size() % 2 == 0) {
      t = embed(sp2[rng() % sp2.size()], sp2[rng() % sp2.size()]);
    } else {
      Matrix a = testing::random_matrix(f7, 2, 2, rng);
      while (determinant(a).is_zero()) a = testing::random_matrix(f7, 2, 2, rng);
      const Matrix blocks[] = {a, inverse(a).transpose()};
      t = Matrix::block_diagonal(f7, blocks);
    }
    const Matrix g = testing::random_isometry(v, rng, 5);
    t = g * t * inverse(g);
    if (t.transpose() * gl * t == gl) g_sp4.push_back(t);
  }
}

void criterion_6(Report& r) {
  build_sp4_corpus();
  const Level f7 = make_prime_field(7);
  const auto v = symplectic(f7, 4);
  const Matrix id = Matrix::identity(f7, 4);
  for (const auto& t : g_sp4) {
    const auto jp = multiplicative_jordan(t, v);
    const Matrix& s = jp.semisimple;
    const Matrix& u = jp.unipotent;
    r.expect(s * u == t, "T_s T_u != T");
    r.expect(s * u == u * s, "parts do not commute");
    r.expect(is_isometry(s, v) && is_isometry(u, v), "parts are not isometries");
    r.expect(evaluate(jp.semisimple_poly, t) == s, "p_s(T) != T_s");
    r.expect(evaluate(jp.unipotent_poly, t) == u, "p_u(T) != T_u");
    r.expect((u - id).pow(4).is_zero(), "T_u is not unipotent");
    // Independent re-derivation: T_s is the diagonal part of T in a Jordan basis.
    const JordanBasis jb = jordan_basis(t);
    const Level l = jb.basis.level();
    std::vector<FieldElement> diag;
    for (const auto& d : jb.divisors.entries)
      for (std::size_t k = 0; k < d.size; ++k) diag.push_back(d.eigenvalue.lift(l));
    const Matrix s2 = jb.basis * Matrix::diagonal(diag) * inverse(jb.basis);
    r.expect(s2 == s, "T_s differs from the eigen-data reconstruction");
    r.expect(inverse(s2) * t == u, "T_u differs from the eigen-data reconstruction");
  }
  r.expect(g_sp4.size() >= 100, "fewer than 100 operators");
  r.detail << g_sp4.size() << " Sp(4,7) operators";
}

void criterion_7(Report& r) {
  build_sp4_corpus();
  const Level f7 = make_prime_field(7);
  const auto v = symplectic(f7, 4);
  int standard = 0;
  for (const auto& t : g_sp4) {
    const auto pd = primary_decomposition(t, v);
    const Level l = pd.level;
    const BilinearSpace vl = v.lift(l);
    const Matrix tl = t.lift(l);
    std::vector<Matrix> comps;
    if (pd.plus.space.dim() > 0) comps.push_back(pd.plus.space.basis);
    if (pd.minus.space.dim() > 0) comps.push_back(pd.minus.space.basis);
    for (const auto& s : pd.standard) {
      ++standard;
      r.expect(s.v_lambda.dim() == s.v_lambda_inv.dim(), "dim V_lambda != dim V_lambda^-1");
      r.expect(vl.restricted_gram(s.v_lambda.basis).is_zero() && vl.restricted_gram(s.v_lambda_inv.basis).is_zero(),
               "V_lambda is not isotropic");
      r.expect(!(s.lambda == l->one()) && !(s.lambda == -l->one()), "standard part at +-1");
      r.expect(generalized_eigenspace(tl, s.lambda).dim() == s.v_lambda.dim(), "V_lambda has the wrong dimension");
      const Matrix parts[] = {s.v_lambda.basis, s.v_lambda_inv.basis};
      comps.push_back(Matrix::hcat(l, 4, parts));
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      total += comps[i].cols();
      r.expect(!determinant(vl.restricted_gram(comps[i])).is_zero(), "degenerate component");
      r.expect(restrict_operator(tl, comps[i]).rows() == comps[i].cols(), "component is not invariant");
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        r.expect((comps[i].transpose() * vl.gram() * comps[j]).is_zero(), "components are not orthogonal");
    }
    r.expect(total == 4 && rank(Matrix::hcat(l, 4, comps)) == 4, "components do not span V");
    const SelfDualSplit split = self_dual_split(characteristic_polynomial(t));
    r.expect(static_cast<int>(pd.plus.space.dim()) == split.l, "dim V_1 != multiplicity of 1");
    r.expect(static_cast<int>(pd.minus.space.dim()) == split.m, "dim V_-1 != multiplicity of -1");
    bool match = pd.standard.size() == split.pairs.size();
    for (std::size_t i = 0; match && i < split.pairs.size(); ++i)
      match = pd.standard[i].lambda == split.pairs[i].lambda &&
              static_cast<int>(pd.standard[i].v_lambda.dim()) == split.pairs[i].multiplicity;
    r.expect(match, "standard parts do not match the self-dual split");
  }
  r.detail << g_sp4.size() << " operators, " << standard << " standard parts";
}

std::string run_in_process(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  code = cli::run(args, out);
  return out.str();
}

std::string run_subprocess(const std::vector<std::string>& args, int& code) {
  std::string cmd = "'" + kCli + "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_8(Report& r) {
  std::vector<std::filesystem::path> corpus;
  for (const auto& e : std::filesystem::directory_iterator(kData))
    if (e.path().extension() == ".json") corpus.push_back(e.path());
  std::sort(corpus.begin(), corpus.end());
  r.expect(corpus.size() == 12, "corpus should have 12 cases");

  std::vector<std::pair<std::string, std::vector<std::string>>> runs;
  for (const auto& path : corpus) {
    const std::string stem = path.stem().string();
    for (const char* cmd : {"check", "eldiv", "primary", "jordan", "jm", "unidec"}) {
      runs.push_back({stem + "." + cmd + ".S", {cmd, "--problem", path.string(), "--op", "S"}});
      runs.push_back({stem + "." + cmd + ".T", {cmd, "--problem", path.string()}});
    }
    runs.push_back({stem + ".conj", {"conj", "--problem", path.string()}});
    runs.push_back({stem + ".conj.TS", {"conj", "--problem", path.string(), "--S", "T", "--T", "S"}});
    runs.push_back({stem + ".oracle", {"oracle", "--problem", path.string()}});
  }
  for (const char* m : {"1", "2", "3", "4"}) runs.push_back({std::string("symform.") + m, {"symform", m, "--p", "11"}});
  runs.push_back({"symform.2.deg2", {"symform", "2", "--p", "7", "--degree", "2"}});

  const auto golden_dir = kData / "golden";
  if (g_update_golden) std::filesystem::create_directories(golden_dir);
  int goldens = 0, subprocesses = 0;
  for (const auto& [name, args] : runs) {
    int c1 = 0, c2 = 0, c3 = 0;
    const std::string a = run_in_process(args, c1);
    const std::string b = run_in_process(args, c2);
    r.expect(a == b && c1 == c2, "in-process outputs differ for " + name);
    r.expect(c1 == 0 || c1 == 2, "unexpected exit code for " + name);
    const std::string s = run_subprocess(args, c3);
    ++subprocesses;
    r.expect(s == a && c3 == c1, "subprocess output differs for " + name);
    const auto golden = golden_dir / (name + ".json");
    if (g_update_golden) {
      std::ofstream(golden) << a;
    } else {
      std::ifstream in(golden);
      r.expect(static_cast<bool>(in), "missing golden " + golden.string());
      std::stringstream buf;
      buf << in.rdbuf();
      r.expect(buf.str() == a, "golden mismatch for " + name);
    }
    ++goldens;
  }
  r.detail << runs.size() << " invocations, each twice in-process and once as a subprocess; " << goldens
           << (g_update_golden ? " goldens written" : " goldens compared");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--update-golden") g_update_golden = true;

  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    void (*fn)(Report&);
  };
  const Criterion criteria[] = {
      {1, "exhaustive Sp(2,3) and Sp(2,5) conjugacy with oracle sample", 60, criterion_1},
      {2, "O(2,5) pairwise and O(3,7) block products", 60, criterion_2},
      {3, "symmetric power form table", 1, criterion_3},
      {4, "sl2-triples of unipotent isometries", 30, criterion_4},
      {5, "parity law of irreducible summands", 30, criterion_5},
      {6, "multiplicative Jordan decomposition on Sp(4,7)", 60, criterion_6},
      {7, "primary decomposition invariants on Sp(4,7)", 60, criterion_7},
      {8, "CLI determinism on the 12-case corpus", 120, criterion_8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.fn(r);
    } catch (const std::exception& e) {
      r.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.expect(secs < c.budget_s, "over the time budget");
    all = all && r.pass;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", c.id, r.pass ? "PASS" : "FAIL", c.title, secs,
                r.detail.str().c_str());
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
