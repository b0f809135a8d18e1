#include "isoconj/tower.hpp"

#include <map>
#include <mutex>

#include "isoconj/error.hpp"
#include "isoconj/factor.hpp"

namespace isoconj {

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Polynomial g = f.monic();
  const auto d = static_cast<std::size_t>(g.degree());
  const std::uint64_t q = g.level()->order();
  const Polynomial x = Polynomial::x(g.level());
  // frob[k] = x^(q^k) mod g
  std::vector<Polynomial> frob{mod(x, g)};
  for (std::size_t k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[d] == mod(x, g))) return false;
  for (std::size_t r : prime_divisors(d)) {
    if (!gcd(frob[d / r] - x, g).is_one()) return false;
  }
  return true;
}

Polynomial find_irreducible(Level level, std::size_t degree) {
  if (degree == 0) throw Error(ErrorCode::ShapeError, "irreducible degree must be positive");
  const std::uint64_t q = level->order();
  for (std::uint64_t n = 0;; ++n) {
    std::vector<FieldElement> c;
    std::uint64_t rest = n;
    for (std::size_t i = 0; i < degree; ++i) {
      c.push_back(level->from_index(rest % q));
      rest /= q;
    }
    if (rest != 0) break;
    c.push_back(level->one());
    Polynomial f(level, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw Error(ErrorCode::Internal, "irreducible scan exhausted");
}

Level extend(Level level, std::size_t degree) {
  if (degree == 0) throw Error(ErrorCode::ShapeError, "extension degree must be positive");
  if (degree == 1) return level;
  static std::mutex mutex;
  static std::map<std::pair<Level, std::size_t>, Level> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({level, degree}); it != cache.end()) return it->second;
  }
  Polynomial f = find_irreducible(level, degree);
  Level result = intern_extension(level, {f.coefficients().begin(), f.coefficients().end()});
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(level, degree), result);
  return result;
}

Level extend_with(const Polynomial& defining_polynomial) {
  if (!defining_polynomial.is_monic() || !is_irreducible(defining_polynomial)) {
    throw Error(ErrorCode::InvalidForm, "defining polynomial must be monic irreducible");
  }
  const auto& c = defining_polynomial.coefficients();
  return intern_extension(defining_polynomial.level(), {c.begin(), c.end()});
}

SquareRoot sqrt_or_extend(const FieldElement& a) {
  if (a.is_zero()) return {a.level(), a};
  if (a.level()->characteristic() == 2) {
    // Squaring is a bijection in characteristic two.
    const FieldElement m = a.minimal();
    return {m.level(), m.pow(m.level()->order() / 2)};
  }
  // Walk the chain from the element's minimal level up to its own level.
  std::vector<Level> chain;
  const FieldElement base = a.minimal();
  for (Level l = a.level(); l != nullptr; l = l->parent()) {
    chain.insert(chain.begin(), l);
    if (l == base.level()) break;
  }
  for (Level l : chain) {
    const FieldElement al = base.lift(l);
    if (!al.pow((l->order() - 1) / 2).is_one()) continue;
    Polynomial f(l, {-al, l->zero(), l->one()});
    auto rs = roots(f);
    if (!rs.empty()) return {l, rs.front().root};
  }
  Level up = extend(a.level(), 2);
  const FieldElement al = a.lift(up);
  auto rs = roots(Polynomial(up, {-al, up->zero(), up->one()}));
  if (rs.empty()) throw Error(ErrorCode::Internal, "no square root in quadratic extension");
  return {up, rs.front().root};
}

}  // namespace isoconj
