#include "isoconj/poly.hpp"

#include <algorithm>
#include <sstream>

#include "isoconj/error.hpp"

namespace isoconj {

Polynomial::Polynomial(Level level) : level_(level) {}

Polynomial::Polynomial(Level level, std::vector<FieldElement> coeffs) : level_(level), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.level() != level_) c = c.lift(level_);
  }
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.level(), {c}); }

Polynomial Polynomial::x(Level level) { return Polynomial(level, {level->zero(), level->one()}); }

Polynomial Polynomial::linear(const FieldElement& root) {
  return Polynomial(root.level(), {-root, root.level()->one()});
}

Polynomial Polynomial::from_ints(Level level, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back(level->from_int(v));
  return Polynomial(level, std::move(c));
}

FieldElement Polynomial::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : level_->zero(); }

const FieldElement& Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  Level l = common_level(level_, x.level());
  FieldElement acc = l->zero();
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(c_[i] * level_->from_int(static_cast<std::int64_t>(i % level_->characteristic())));
  }
  return Polynomial(level_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return leading().inverse() * *this;
}

Polynomial Polynomial::lift(Level target) const {
  if (target == level_) return *this;
  std::vector<FieldElement> c;
  c.reserve(c_.size());
  for (const auto& e : c_) c.push_back(e.lift(target));
  return Polynomial(target, std::move(c));
}

std::optional<Polynomial> Polynomial::descend(Level target) const {
  std::vector<FieldElement> c;
  for (const auto& e : c_) {
    auto d = e.descend(target);
    if (!d) return std::nullopt;
    c.push_back(*d);
  }
  return Polynomial(target, std::move(c));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& e : r.c_) e = -e;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Level l = common_level(a.level_, b.level_);
  std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), l->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(l, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Level l = common_level(a.level_, b.level_);
  if (a.is_zero() || b.is_zero()) return Polynomial(l);
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, l->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(l, std::move(c));
}

Polynomial operator*(const FieldElement& s, const Polynomial& a) {
  Level l = common_level(s.level(), a.level_);
  std::vector<FieldElement> c;
  c.reserve(a.c_.size());
  for (const auto& e : a.c_) c.push_back(s * e);
  return Polynomial(l, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) os << c_[i].to_string();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  Level l = common_level(a.level(), b.level());
  std::vector<FieldElement> r(a.coefficients().begin(), a.coefficients().end());
  for (auto& e : r) e = e.lift(l);
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(l), Polynomial(l, std::move(r))};
  const FieldElement lead_inv = b.leading().inverse();
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db + 1), l->zero());
  for (int k = a.degree(); k >= db; --k) {
    FieldElement coef = r[static_cast<std::size_t>(k)] * lead_inv;
    if (coef.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = coef;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k - db + j)] -= coef * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(l, std::move(q)), Polynomial(l, std::move(r))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

Polynomial mod(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Level l = common_level(a.level(), b.level());
  Polynomial r0 = a.lift(l), r1 = b.lift(l);
  Polynomial s0 = Polynomial::constant(l->one()), s1(l);
  Polynomial t0(l), t1 = Polynomial::constant(l->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  auto eg = extended_gcd(mod(a, m), m);
  if (!eg.g.is_one()) throw Error(ErrorCode::SingularOperator, "polynomial is not invertible modulo m");
  return mod(eg.s, m);
}

Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
  Polynomial result = Polynomial::constant(base.level()->one());
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

Polynomial powmod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus) {
  Polynomial result = mod(Polynomial::constant(modulus.level()->one()), modulus);
  Polynomial b = mod(base, modulus);
  while (exponent > 0) {
    if (exponent & 1U) result = mod(result * b, modulus);
    exponent >>= 1U;
    if (exponent > 0) b = mod(b * b, modulus);
  }
  return result;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.degree() == 1 && a.is_monic() && b.is_monic()) {
    return (-a.coefficient(0)).index() < (-b.coefficient(0)).index();
  }
  for (int i = a.degree(); i >= 0; --i) {
    auto ia = a.coefficient(static_cast<std::size_t>(i)).index();
    auto ib = b.coefficient(static_cast<std::size_t>(i)).index();
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace isoconj
