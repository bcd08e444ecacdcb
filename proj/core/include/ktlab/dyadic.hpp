#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktlab {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a subtraction would produce a negative value. All game
/// quantities are nonnegative by construction, so this always indicates a
/// caller bug or a malformed input file.
struct DyadicUnderflow : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact nonnegative dyadic rational: mantissa * 2^-exponent.
///
/// Canonical form: the mantissa is odd, or the value is zero with exponent
/// zero. Addition, subtraction, multiplication, comparison and scaling by
/// powers of two are all exact; there is no rounding anywhere.
class Dyadic {
 public:
  Dyadic() = default;
  explicit Dyadic(std::uint64_t integer) : mant_(integer) {}

  /// value = mantissa * 2^-exponent; normalizes to canonical form.
  static Dyadic from_parts(BigInt mantissa, std::uint64_t exponent);

  /// 2^-e
  static Dyadic pow2_neg(std::uint64_t e) { return from_parts(BigInt(1), e); }

  /// Parses "mantissa" or "mantissa:exponent" with a decimal mantissa.
  static Dyadic parse(const std::string& text);

  const BigInt& mantissa() const { return mant_; }
  std::uint64_t exponent() const { return exp_; }
  bool is_zero() const { return mant_.is_zero(); }

  Dyadic operator+(const Dyadic& other) const;
  /// Requires *this >= other.
  Dyadic operator-(const Dyadic& other) const;
  Dyadic operator*(const Dyadic& other) const;
  Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
  Dyadic& operator-=(const Dyadic& other) { return *this = *this - other; }

  /// Multiplies by 2^shift; negative shifts divide. Always exact.
  Dyadic scale2(std::int64_t shift) const;
  Dyadic halve() const { return scale2(-1); }

  Dyadic pow(std::uint64_t n) const;

  static const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
  static const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

  std::strong_ordering operator<=>(const Dyadic& other) const;
  bool operator==(const Dyadic& other) const;

  /// Canonical "mantissa:exponent" (just "mantissa" when the exponent is 0).
  /// Round-trips exactly through parse().
  std::string str() const;

 private:
  BigInt mant_;          // >= 0
  std::uint64_t exp_ = 0;
};

/// Largest dyadic with exponent <= precision_bits that does not exceed
/// num/den (den > 0). Used to report witnessed constants where the exact
/// ratio of two dyadics need not be dyadic itself.
Dyadic floor_ratio(const Dyadic& num, const Dyadic& den, std::uint64_t precision_bits);

/// Largest dyadic with exponent <= precision_bits not exceeding
/// value/divisor for an integer divisor.
Dyadic floor_div(const Dyadic& value, std::uint64_t divisor, std::uint64_t precision_bits);

/// Smallest dyadic with exponent <= precision_bits that is >= num/den.
Dyadic ceil_ratio(const Dyadic& num, const Dyadic& den, std::uint64_t precision_bits);

}  // namespace ktlab
