#pragma once

// Dense univariate polynomials over a tower level.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isoconj/field.hpp"

namespace isoconj {

class Polynomial {
 public:
  explicit Polynomial(Level level);
  /// Ascending coefficients; trailing zeros are trimmed. Coefficients from
  /// ancestor levels are lifted.
  Polynomial(Level level, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(Level level);
  /// x - root
  static Polynomial linear(const FieldElement& root);
  static Polynomial from_ints(Level level, std::initializer_list<std::int64_t> coeffs);

  Level level() const noexcept { return level_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

  std::span<const FieldElement> coefficients() const noexcept { return c_; }
  /// Zero beyond the degree.
  FieldElement coefficient(std::size_t i) const;
  const FieldElement& leading() const;

  FieldElement evaluate(const FieldElement& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial lift(Level target) const;
  /// Coefficientwise descent; nullopt if some coefficient is not in `target`.
  std::optional<Polynomial> descend(Level target) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void trim();

  Level level_;
  std::vector<FieldElement> c_;
};

/// Quotient and remainder. Throws ZeroPolynomial on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws Internal if the division leaves a remainder.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
Polynomial mod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g, s, t;  // s*a + t*b = g, g monic
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m; throws SingularOperator if gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);
Polynomial pow(const Polynomial& base, std::uint64_t exponent);
Polynomial powmod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus);

/// Order used for canonical sorting: degree, then coefficients from the
/// highest non-leading one down (linear factors compare by root).
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace isoconj
