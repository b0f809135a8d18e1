#pragma once

// Finite field tower arithmetic.
//
// A tower is a chain GF(p) = L0 < L1 < ... where each level Lk is
// L(k-1)[t]/(m(t)) for a monic irreducible m over L(k-1). Elements are stored
// as a flat coefficient vector over GF(p) of length [Lk : GF(p)], laid out
// recursively: the element sum_i c_i t^i with c_i in L(k-1) is the
// concatenation of the flat vectors of c_0, c_1, ... . With this layout the
// embedding of an ancestor level is zero padding.
//
// Levels are interned and immutable; a Level handle is a plain pointer that
// stays valid for the lifetime of the process.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace isoconj {

class FieldLevel;
using Level = const FieldLevel*;

class FieldElement {
 public:
  using Coeffs = boost::container::small_vector<std::uint32_t, 4>;

  FieldElement() = default;
  FieldElement(Level level, Coeffs coeffs);

  Level level() const noexcept { return level_; }
  std::span<const std::uint32_t> coefficients() const noexcept { return {c_.data(), c_.size()}; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rank in coefficient order: sum_j c_j p^j, c_0 least significant.
  std::uint64_t index() const noexcept;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws SingularOperator on zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  /// Embeds into a descendant level (or returns *this for the same level).
  FieldElement lift(Level target) const;
  /// The same element expressed over an ancestor level, if it lies there.
  std::optional<FieldElement> descend(Level target) const;
  /// Re-expresses over the lowest ancestor level containing the element.
  FieldElement minimal() const;

  /// Prime-field elements as integers in (-p/2, p/2]; nullopt otherwise.
  std::optional<std::int64_t> as_signed_integer() const;

  /// Equality across comparable levels; elements of unrelated levels differ.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  Level level_ = nullptr;
  Coeffs c_;
};

/// Strict weak order by (level degree, coefficient index); used for canonical sorting.
bool canonical_less(const FieldElement& a, const FieldElement& b);

class FieldLevel {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  /// Degree over the prime field.
  std::size_t degree() const noexcept { return degree_; }
  /// Degree over the parent level (1 for a prime field).
  std::size_t relative_degree() const noexcept { return rel_degree_; }
  Level parent() const noexcept { return parent_; }
  std::size_t depth() const noexcept { return depth_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return parent_ == nullptr; }

  /// Monic defining polynomial over the parent, ascending. Empty for GF(p).
  const std::vector<FieldElement>& defining_polynomial() const noexcept { return modulus_; }

  /// True if `other` equals this level or is one of its ancestors.
  bool contains(Level other) const noexcept;

  Level prime_field() const noexcept;

  FieldElement zero() const;
  FieldElement one() const;
  /// Integer embedded through the prime field; negatives reduced mod p.
  FieldElement from_int(std::int64_t value) const;
  /// Flat coefficients (least significant first); reduced mod p. Missing
  /// trailing coefficients are zero.
  FieldElement from_coefficients(std::span<const std::int64_t> coeffs) const;
  FieldElement from_index(std::uint64_t index) const;

  std::string name() const;

  // Arithmetic kernels on flat coefficient spans of length degree().
  void add(std::uint32_t* acc, const std::uint32_t* b) const noexcept;
  void sub(std::uint32_t* acc, const std::uint32_t* b) const noexcept;
  void mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;

  FieldLevel(std::uint32_t p, Level parent, std::vector<FieldElement> modulus);

 private:
  std::uint32_t p_;
  Level parent_;
  std::size_t rel_degree_;
  std::size_t degree_;
  std::size_t depth_;
  std::uint64_t order_;
  std::vector<FieldElement> modulus_;
  std::vector<std::uint32_t> modulus_flat_;  // low coefficients m_0..m_{d-1}, flat
};

bool is_prime(std::uint64_t n);

/// GF(p). Throws CompositeCharacteristic if p is not prime, FieldTooLarge if p >= 2^31.
Level make_prime_field(std::uint64_t p);

/// Interned extension parent[t]/(modulus). The caller guarantees
/// irreducibility (see tower.hpp for the checked constructors).
Level intern_extension(Level parent, std::vector<FieldElement> modulus);

/// The deeper of two levels on one chain. Throws LevelMismatch otherwise.
Level common_level(Level a, Level b);
bool comparable(Level a, Level b) noexcept;

}  // namespace isoconj
