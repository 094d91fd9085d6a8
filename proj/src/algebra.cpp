#include "gjl/algebra.hpp"

#include <stdexcept>

namespace gjl {

std::optional<TruthValue> TruthValue::make(Rational r) {
  if (r > Rational{1, 1}) return std::nullopt;
  return TruthValue{std::move(r)};
}

TruthValue TruthValue::ratio(std::uint64_t n, std::uint64_t d) {
  auto v = make(Rational{n, d});
  if (!v) throw std::invalid_argument("TruthValue::ratio out of [0,1]");
  return *v;
}

std::optional<TruthValue> TruthValue::parse(std::string_view text) {
  auto r = Rational::parse(text);
  if (!r) return std::nullopt;
  return make(std::move(*r));
}

TruthValue tnorm(const TruthValue& a, const TruthValue& b) { return a <= b ? a : b; }

TruthValue tconorm(const TruthValue& a, const TruthValue& b) { return a >= b ? a : b; }

TruthValue residuum(const TruthValue& a, const TruthValue& b) {
  return a > b ? b : TruthValue::one();
}

TruthValue wneg(const TruthValue& a) {
  return a > TruthValue::zero() ? TruthValue::zero() : TruthValue::one();
}

} // namespace gjl
