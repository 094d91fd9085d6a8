#include "gjl/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gjl {

BigNat::BigNat(std::uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    std::uint32_t hi = static_cast<std::uint32_t>(v >> 32);
    if (hi != 0) limbs_.push_back(hi);
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat BigNat::operator+(const BigNat& rhs) const {
  BigNat out;
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  out.limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < limbs_.size()) s += limbs_[i];
    if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
    out.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigNat BigNat::operator-(const BigNat& rhs) const {
  BigNat out;
  out.limbs_.resize(limbs_.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  if (borrow) throw std::logic_error("BigNat subtraction underflow");
  out.trim();
  return out;
}

BigNat BigNat::operator*(const BigNat& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigNat{};
  BigNat out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

void BigNat::halve() { shift_right_bits(1); }

void BigNat::double_in_place() { shift_left_bits(1); }

std::size_t BigNat::trailing_zero_bits() const {
  std::size_t bits = 0;
  for (std::uint32_t limb : limbs_) {
    if (limb == 0) {
      bits += 32;
      continue;
    }
    std::uint32_t v = limb;
    while ((v & 1u) == 0) {
      ++bits;
      v >>= 1;
    }
    break;
  }
  return bits;
}

void BigNat::shift_left_bits(std::size_t bits) {
  if (is_zero() || bits == 0) return;
  const std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
  std::vector<std::uint32_t> out(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    out[i + limb_shift] |= static_cast<std::uint32_t>(v & 0xffffffffu);
    out[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  limbs_ = std::move(out);
  trim();
}

void BigNat::shift_right_bits(std::size_t bits) {
  if (is_zero() || bits == 0) return;
  const std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return;
  }
  std::vector<std::uint32_t> out(limbs_.size() - limb_shift, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
      v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
    out[i] = static_cast<std::uint32_t>(v);
  }
  limbs_ = std::move(out);
  trim();
}

// Binary gcd: strip common powers of two, then subtract-and-halve.
BigNat BigNat::gcd(BigNat a, BigNat b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t za = a.trailing_zero_bits();
  const std::size_t zb = b.trailing_zero_bits();
  const std::size_t common = std::min(za, zb);
  a.shift_right_bits(za);
  b.shift_right_bits(zb);
  while (a != b) {
    if (a < b) std::swap(a, b);
    a = a - b;
    a.shift_right_bits(a.trailing_zero_bits());
  }
  a.shift_left_bits(common);
  return a;
}

// Restoring binary long division, most significant bit first.
std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& value, const BigNat& by) {
  if (by.is_zero()) throw std::invalid_argument("BigNat::divmod by zero");
  BigNat quotient, remainder;
  const BigNat one{1};
  std::vector<bool> bits;
  for (BigNat probe = value; !probe.is_zero(); probe.shift_right_bits(1))
    bits.push_back(!probe.is_even());
  for (std::size_t i = bits.size(); i-- > 0;) {
    remainder.double_in_place();
    if (bits[i]) remainder = remainder + one;
    quotient.double_in_place();
    if (remainder >= by) {
      remainder = remainder - by;
      quotient = quotient + one;
    }
  }
  return {quotient, remainder};
}

std::uint32_t BigNat::divmod_small(std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

void BigNat::mul_small_add(std::uint32_t m, std::uint32_t a) {
  std::uint64_t carry = a;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * m + carry;
    limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
}

std::optional<BigNat> BigNat::from_decimal(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  BigNat out;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    out.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  return out;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  BigNat tmp = *this;
  std::string out;
  while (!tmp.is_zero()) out.push_back(static_cast<char>('0' + tmp.divmod_small(10)));
  std::reverse(out.begin(), out.end());
  return out;
}

Rational::Rational(std::uint64_t n, std::uint64_t d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  normalize();
}

Rational::Rational(BigNat n, BigNat d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    den_ = BigNat{1};
    return;
  }
  BigNat g = BigNat::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = BigNat::divmod(num_, g).first;
    den_ = BigNat::divmod(den_, g).first;
  }
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = BigNat::from_decimal(text);
    if (!n) return std::nullopt;
    return Rational(*n, BigNat{1});
  }
  auto n = BigNat::from_decimal(text.substr(0, slash));
  auto d = BigNat::from_decimal(text.substr(slash + 1));
  if (!n || !d || d->is_zero()) return std::nullopt;
  return Rational(*n, *d);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_decimal();
  return num_.to_decimal() + "/" + den_.to_decimal();
}

} // namespace gjl
