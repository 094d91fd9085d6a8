#ifndef GJL_ALGEBRA_HPP
#define GJL_ALGEBRA_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "gjl/rational.hpp"

namespace gjl {

/// Exact truth value in [0,1]. Immutable, totally ordered.
class TruthValue {
public:
  TruthValue() : v_() {} // 0

  static TruthValue zero() { return TruthValue{}; }
  static TruthValue one() { return TruthValue{Rational{1, 1}}; }

  /// Rejects values outside [0,1].
  static std::optional<TruthValue> make(Rational r);
  static TruthValue ratio(std::uint64_t n, std::uint64_t d); // throws if n/d > 1

  /// Accepts "p/q" (q > 0) or an integer, in [0,1].
  static std::optional<TruthValue> parse(std::string_view text);

  std::string to_string() const { return v_.to_string(); }
  const Rational& rational() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == Rational{1, 1}; }

  std::strong_ordering operator<=>(const TruthValue& rhs) const = default;

private:
  explicit TruthValue(Rational r) : v_(std::move(r)) {}
  Rational v_;
};

/// min{a,b}
TruthValue tnorm(const TruthValue& a, const TruthValue& b);
/// max{a,b}
TruthValue tconorm(const TruthValue& a, const TruthValue& b);
/// b if a > b, 1 otherwise
TruthValue residuum(const TruthValue& a, const TruthValue& b);
/// 0 if a > 0, 1 otherwise
TruthValue wneg(const TruthValue& a);

} // namespace gjl

#endif
