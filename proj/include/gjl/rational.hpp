#ifndef GJL_RATIONAL_HPP
#define GJL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gjl {

/// Arbitrary-precision unsigned integer, little-endian 32-bit limbs.
/// Canonical form: no trailing zero limbs; an empty limb vector is zero.
/// Only the operations the truth-value lattice needs are provided:
/// comparison, add/sub/mul, gcd, and decimal conversion.
class BigNat {
public:
  BigNat() = default;
  BigNat(std::uint64_t v);

  static std::optional<BigNat> from_decimal(std::string_view digits);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  std::strong_ordering operator<=>(const BigNat& rhs) const;
  bool operator==(const BigNat& rhs) const = default;

  BigNat operator+(const BigNat& rhs) const;
  BigNat operator-(const BigNat& rhs) const; // pre: *this >= rhs
  BigNat operator*(const BigNat& rhs) const;

  static BigNat gcd(BigNat a, BigNat b);
  static std::pair<BigNat, BigNat> divmod(const BigNat& value, const BigNat& by); // pre: by != 0

private:
  void trim();
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  void halve();
  void double_in_place();
  std::size_t trailing_zero_bits() const; // pre: not zero
  void shift_left_bits(std::size_t bits);
  void shift_right_bits(std::size_t bits);
  std::uint32_t divmod_small(std::uint32_t d); // divides in place, returns remainder
  void mul_small_add(std::uint32_t m, std::uint32_t a);

  std::vector<std::uint32_t> limbs_;
};

/// Exact non-negative rational in lowest terms, positive denominator.
/// Equality is component-wise (canonical form makes it arithmetic equality).
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::uint64_t n, std::uint64_t d); // pre: d != 0
  Rational(BigNat n, BigNat d);               // pre: d != 0

  static std::optional<Rational> parse(std::string_view text); // "p/q" or "p"
  std::string to_string() const; // lowest terms, "p" when q == 1

  const BigNat& num() const { return num_; }
  const BigNat& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::strong_ordering operator<=>(const Rational& rhs) const;
  bool operator==(const Rational& rhs) const = default;

private:
  void normalize();
  BigNat num_, den_;
};

} // namespace gjl

#endif
