#include "isoconj/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "isoconj/error.hpp"

namespace isoconj {

namespace {

struct Registry {
  std::mutex mutex;
  std::map<std::uint32_t, std::unique_ptr<FieldLevel>> primes;
  std::map<std::pair<Level, std::vector<std::uint32_t>>, std::unique_ptr<FieldLevel>> extensions;
};

Registry& registry() {
  static Registry r;
  return r;
}

void require_same(Level a, Level b) {
  if (a != b) throw Error(ErrorCode::LevelMismatch, "field elements live at different levels");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Level make_prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::FieldTooLarge, "characteristic must be below 2^31");
  }
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto& slot = r.primes[static_cast<std::uint32_t>(p)];
  if (!slot) slot = std::make_unique<FieldLevel>(static_cast<std::uint32_t>(p), nullptr,
                                                 std::vector<FieldElement>{});
  return slot.get();
}

Level intern_extension(Level parent, std::vector<FieldElement> modulus) {
  if (modulus.size() < 2 || !modulus.back().is_one()) {
    throw Error(ErrorCode::Internal, "defining polynomial must be monic of degree >= 1");
  }
  std::vector<std::uint32_t> key;
  for (const auto& c : modulus) {
    require_same(c.level(), parent);
    auto cs = c.coefficients();
    key.insert(key.end(), cs.begin(), cs.end());
  }
  if (modulus.size() == 2) return parent;
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto& slot = r.extensions[{parent, key}];
  if (!slot) slot = std::make_unique<FieldLevel>(parent->characteristic(), parent, std::move(modulus));
  return slot.get();
}

bool comparable(Level a, Level b) noexcept {
  return a != nullptr && b != nullptr && (a->contains(b) || b->contains(a));
}

Level common_level(Level a, Level b) {
  if (a == b) return a;
  if (a && a->contains(b)) return a;
  if (b && b->contains(a)) return b;
  throw Error(ErrorCode::LevelMismatch, "levels are not on a common tower chain");
}

// ---------------------------------------------------------------------------

FieldLevel::FieldLevel(std::uint32_t p, Level parent, std::vector<FieldElement> modulus)
    : p_(p), parent_(parent), modulus_(std::move(modulus)) {
  if (parent_ == nullptr) {
    rel_degree_ = 1;
    degree_ = 1;
    depth_ = 0;
    order_ = p_;
    return;
  }
  rel_degree_ = modulus_.size() - 1;
  degree_ = parent_->degree() * rel_degree_;
  depth_ = parent_->depth() + 1;
  unsigned __int128 order = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    order *= p_;
    if (order >= (static_cast<unsigned __int128>(1) << 62)) {
      throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^62");
    }
  }
  order_ = static_cast<std::uint64_t>(order);
  for (std::size_t i = 0; i < rel_degree_; ++i) {
    auto cs = modulus_[i].coefficients();
    modulus_flat_.insert(modulus_flat_.end(), cs.begin(), cs.end());
  }
}

bool FieldLevel::contains(Level other) const noexcept {
  for (Level l = this; l != nullptr; l = l->parent_) {
    if (l == other) return true;
  }
  return false;
}

Level FieldLevel::prime_field() const noexcept {
  Level l = this;
  while (l->parent_) l = l->parent_;
  return l;
}

FieldElement FieldLevel::zero() const { return FieldElement(this, FieldElement::Coeffs(degree_, 0)); }

FieldElement FieldLevel::one() const {
  FieldElement::Coeffs c(degree_, 0);
  c[0] = 1;
  return FieldElement(this, std::move(c));
}

FieldElement FieldLevel::from_int(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  FieldElement::Coeffs c(degree_, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return FieldElement(this, std::move(c));
}

FieldElement FieldLevel::from_coefficients(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > degree_) {
    throw Error(ErrorCode::ShapeError, "too many coefficients for " + name());
  }
  FieldElement::Coeffs c(degree_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    c[i] = static_cast<std::uint32_t>(r);
  }
  return FieldElement(this, std::move(c));
}

FieldElement FieldLevel::from_index(std::uint64_t index) const {
  FieldElement::Coeffs c(degree_, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return FieldElement(this, std::move(c));
}

std::string FieldLevel::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (degree_ > 1) os << "^" << degree_;
  os << ")";
  return os.str();
}

void FieldLevel::add(std::uint32_t* acc, const std::uint32_t* b) const noexcept {
  for (std::size_t i = 0; i < degree_; ++i) {
    std::uint32_t s = acc[i] + b[i];
    acc[i] = s >= p_ ? s - p_ : s;
  }
}

void FieldLevel::sub(std::uint32_t* acc, const std::uint32_t* b) const noexcept {
  for (std::size_t i = 0; i < degree_; ++i) {
    acc[i] = acc[i] >= b[i] ? acc[i] - b[i] : acc[i] + p_ - b[i];
  }
}

void FieldLevel::mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (parent_ == nullptr) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return;
  }
  const std::size_t s = parent_->degree();
  const std::size_t d = rel_degree_;
  boost::container::small_vector<std::uint32_t, 32> prod((2 * d - 1) * s, 0);
  boost::container::small_vector<std::uint32_t, 8> tmp(s, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      parent_->mul(a + i * s, b + j * s, tmp.data());
      parent_->add(prod.data() + (i + j) * s, tmp.data());
    }
  }
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    const std::uint32_t* top = prod.data() + k * s;
    if (std::all_of(top, top + s, [](std::uint32_t v) { return v == 0; })) continue;
    for (std::size_t i = 0; i < d; ++i) {
      parent_->mul(top, modulus_flat_.data() + i * s, tmp.data());
      parent_->sub(prod.data() + (k - d + i) * s, tmp.data());
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d * s), out);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(Level level, Coeffs coeffs) : level_(level), c_(std::move(coeffs)) {}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint64_t FieldElement::index() const noexcept {
  std::uint64_t idx = 0;
  const std::uint64_t p = level_->characteristic();
  for (std::size_t i = c_.size(); i-- > 0;) idx = idx * p + c_[i];
  return idx;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = level_->zero();
  level_->sub(r.c_.data(), c_.data());
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  if (level_ != rhs.level_) return *this = lift(common_level(level_, rhs.level_)) += rhs.lift(common_level(level_, rhs.level_));
  level_->add(c_.data(), rhs.c_.data());
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  if (level_ != rhs.level_) return *this = lift(common_level(level_, rhs.level_)) -= rhs.lift(common_level(level_, rhs.level_));
  level_->sub(c_.data(), rhs.c_.data());
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  if (level_ != rhs.level_) return *this = lift(common_level(level_, rhs.level_)) *= rhs.lift(common_level(level_, rhs.level_));
  Coeffs out(c_.size(), 0);
  level_->mul(c_.data(), rhs.c_.data(), out.data());
  c_ = std::move(out);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = level_->one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::SingularOperator, "inverse of zero");
  if (level_->is_prime_field()) {
    // Extended Euclid on residues.
    std::int64_t a = c_[0], m = level_->characteristic(), x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::tie(a, m) = std::make_pair(m, a - q * m);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return level_->from_int(x0);
  }
  return pow(level_->order() - 2);
}

FieldElement FieldElement::lift(Level target) const {
  if (target == level_) return *this;
  if (!target->contains(level_)) {
    throw Error(ErrorCode::LevelMismatch, "cannot lift " + level_->name() + " element to " + target->name());
  }
  Coeffs c = c_;
  c.resize(target->degree(), 0);
  return FieldElement(target, std::move(c));
}

std::optional<FieldElement> FieldElement::descend(Level target) const {
  if (target == level_) return *this;
  if (!level_->contains(target)) return std::nullopt;
  for (std::size_t i = target->degree(); i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  Coeffs c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(target->degree()));
  return FieldElement(target, std::move(c));
}

FieldElement FieldElement::minimal() const {
  FieldElement cur = *this;
  while (cur.level_->parent()) {
    auto down = cur.descend(cur.level_->parent());
    if (!down) break;
    cur = std::move(*down);
  }
  return cur;
}

std::optional<std::int64_t> FieldElement::as_signed_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  const std::int64_t p = level_->characteristic();
  std::int64_t v = c_[0];
  if (v > p / 2) v -= p;
  return v;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.level_ == b.level_) return a.c_ == b.c_;
  if (!comparable(a.level_, b.level_)) return false;
  Level l = common_level(a.level_, b.level_);
  return a.lift(l).c_ == b.lift(l).c_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  // Zero padding preserves the index, so this compares across a chain.
  return a.index() < b.index();
}

std::string FieldElement::to_string() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

}  // namespace isoconj
