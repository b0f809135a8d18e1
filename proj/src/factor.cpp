#include "isoconj/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "isoconj/error.hpp"
#include "isoconj/tower.hpp"

namespace isoconj {

namespace {

// c(x) = sum c_{ip} x^{ip}  ->  sum c_{ip}^{1/p} x^i
Polynomial pth_root(const Polynomial& f) {
  const Level l = f.level();
  const std::uint64_t p = l->characteristic();
  const std::uint64_t root_exp = l->order() / p;
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i * p < f.coefficients().size(); ++i) {
    c.push_back(f.coefficients()[i * p].pow(root_exp));
  }
  return Polynomial(l, std::move(c));
}

std::vector<std::pair<Polynomial, int>> squarefree(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  const Polynomial one = Polynomial::constant(f.level()->one());
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = exact_div(f, c);
  int i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial fac = exact_div(w, y);
    if (!fac.is_one()) out.emplace_back(fac, i);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (!c.is_one()) {
    const int p = static_cast<int>(f.level()->characteristic());
    for (auto& [g, m] : squarefree(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

// Squarefree monic f -> (product of all irreducible factors of degree d, d).
std::vector<std::pair<Polynomial, std::size_t>> distinct_degree(const Polynomial& f) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  const Level l = f.level();
  const std::uint64_t q = l->order();
  const Polynomial x = Polynomial::x(l);
  Polynomial rest = f;
  Polynomial h = mod(x, rest);
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(rest.degree()); ++d) {
    h = powmod(h, q, rest);
    Polynomial g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = exact_div(rest, g);
      h = mod(h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
  return out;
}

Polynomial random_poly(Level l, int degree_below, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (int i = 0; i < degree_below; ++i) c.push_back(l->from_index(rng() % l->order()));
  return Polynomial(l, std::move(c));
}

// Splits g, a product of distinct monic irreducibles of degree d.
void equal_degree(const Polynomial& g, std::size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const Level l = g.level();
  const std::uint64_t q = l->order();
  const bool even = l->characteristic() == 2;
  for (;;) {
    Polynomial a = random_poly(l, g.degree(), rng);
    if (a.degree() < 1) continue;
    Polynomial b(l);
    if (even) {
      // Absolute trace map a + a^2 + ... + a^(2^(kd-1)).
      const std::size_t steps = l->degree() * d;
      Polynomial t = a;
      b = a;
      for (std::size_t i = 1; i < steps; ++i) {
        t = mod(t * t, g);
        b = b + t;
      }
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Polynomial t = mod(a, g);
      Polynomial norm = t;
      for (std::size_t i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        norm = mod(norm * t, g);
      }
      b = powmod(norm, (q - 1) / 2, g) - Polynomial::constant(l->one());
    }
    Polynomial u = gcd(b, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(exact_div(g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  Factorization result;
  result.unit = f.leading();
  std::mt19937_64 rng(result.seed);
  for (const auto& [part, mult] : squarefree(f.monic())) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return result;
}

std::vector<RootMultiplicity> roots(const Polynomial& f) {
  std::vector<RootMultiplicity> out;
  for (const auto& [g, m] : factorize(f).factors) {
    if (g.degree() == 1) out.push_back({-g.coefficient(0), m});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.root, b.root); });
  return out;
}

SplittingField splitting_field(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no splitting field");
  std::size_t degree = 1;
  for (const auto& [g, m] : factorize(f).factors) degree = std::lcm(degree, static_cast<std::size_t>(g.degree()));
  Level level = extend(f.level(), degree);
  return {level, roots(f.lift(level))};
}

SelfDualSplit self_dual_split(const Polynomial& chi) {
  if (chi.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero characteristic polynomial");
  if (chi.coefficient(0).is_zero()) throw Error(ErrorCode::SingularOperator, "zero constant term");
  const Level base = chi.level();
  const FieldElement one = base->one();
  SplittingField sf = splitting_field(chi);
  SelfDualSplit out;
  out.root_level = sf.level;
  std::vector<RootMultiplicity> rest;
  for (const auto& r : sf.roots) {
    if (r.root == one) {
      out.l = r.multiplicity;
    } else if (r.root == -one) {
      out.m = r.multiplicity;
    } else {
      rest.push_back(r);
    }
  }
  Polynomial ones = pow(Polynomial::linear(one), static_cast<std::uint64_t>(out.l)) *
                    pow(Polynomial::linear(-one), static_cast<std::uint64_t>(out.m));
  out.chi_o = exact_div(chi, ones);
  std::vector<bool> used(rest.size(), false);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    const FieldElement inv = rest[i].root.inverse();
    std::size_t j = 0;
    while (j < rest.size() && !(rest[j].root == inv)) ++j;
    if (j == rest.size() || rest[j].multiplicity != rest[i].multiplicity) {
      throw Error(ErrorCode::NotSelfDual, "root " + rest[i].root.to_string() + " is not paired with its inverse");
    }
    used[i] = used[j] = true;
    // rest is ascending, so i < j and rest[i] is the canonical representative.
    out.pairs.push_back({rest[i].root, rest[j].root, rest[i].multiplicity});
  }
  return out;
}

}  // namespace isoconj
