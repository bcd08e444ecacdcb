#include "ktlab/dyadic.hpp"

#include <utility>

namespace ktlab {

namespace {

BigInt shifted(const BigInt& m, std::uint64_t by) {
  BigInt r = m;
  r <<= static_cast<unsigned>(by);
  return r;
}

}  // namespace

Dyadic Dyadic::from_parts(BigInt mantissa, std::uint64_t exponent) {
  if (mantissa < 0) {
    throw DyadicUnderflow("dyadic mantissa must be nonnegative");
  }
  Dyadic d;
  if (mantissa.is_zero()) {
    return d;
  }
  while (exponent > 0 && !boost::multiprecision::bit_test(mantissa, 0)) {
    mantissa >>= 1;
    --exponent;
  }
  d.mant_ = std::move(mantissa);
  d.exp_ = exponent;
  return d;
}

Dyadic Dyadic::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string mant_s = text.substr(0, colon);
  if (mant_s.empty() || mant_s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad dyadic literal: " + text);
  }
  std::uint64_t exp = 0;
  if (colon != std::string::npos) {
    const std::string exp_s = text.substr(colon + 1);
    if (exp_s.empty() || exp_s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad dyadic exponent: " + text);
    }
    exp = std::stoull(exp_s);
  }
  return from_parts(BigInt(mant_s), exp);
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
  const std::uint64_t e = exp_ > other.exp_ ? exp_ : other.exp_;
  return from_parts(shifted(mant_, e - exp_) + shifted(other.mant_, e - other.exp_), e);
}

Dyadic Dyadic::operator-(const Dyadic& other) const {
  const std::uint64_t e = exp_ > other.exp_ ? exp_ : other.exp_;
  BigInt a = shifted(mant_, e - exp_);
  BigInt b = shifted(other.mant_, e - other.exp_);
  if (a < b) {
    throw DyadicUnderflow("dyadic subtraction below zero");
  }
  return from_parts(a - b, e);
}

Dyadic Dyadic::operator*(const Dyadic& other) const {
  return from_parts(mant_ * other.mant_, exp_ + other.exp_);
}

Dyadic Dyadic::scale2(std::int64_t shift) const {
  if (is_zero()) {
    return Dyadic();
  }
  if (shift >= 0) {
    const auto s = static_cast<std::uint64_t>(shift);
    if (s >= exp_) {
      return from_parts(shifted(mant_, s - exp_), 0);
    }
    return from_parts(mant_, exp_ - s);
  }
  return from_parts(mant_, exp_ + static_cast<std::uint64_t>(-shift));
}

Dyadic Dyadic::pow(std::uint64_t n) const {
  Dyadic result(1);
  Dyadic base = *this;
  while (n > 0) {
    if (n & 1) {
      result = result * base;
    }
    n >>= 1;
    if (n > 0) {
      base = base * base;
    }
  }
  return result;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
  const std::uint64_t e = exp_ > other.exp_ ? exp_ : other.exp_;
  const BigInt a = shifted(mant_, e - exp_);
  const BigInt b = shifted(other.mant_, e - other.exp_);
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Dyadic::operator==(const Dyadic& other) const {
  // Canonical form makes representation equality value equality.
  return exp_ == other.exp_ && mant_ == other.mant_;
}

std::string Dyadic::str() const {
  std::string s = mant_.str();
  if (exp_ != 0) {
    s += ':';
    s += std::to_string(exp_);
  }
  return s;
}

Dyadic floor_ratio(const Dyadic& num, const Dyadic& den, std::uint64_t precision_bits) {
  if (den.is_zero()) {
    throw std::invalid_argument("floor_ratio: zero denominator");
  }
  // num/den = (mn * 2^ed) / (md * 2^en); floor to a grid of 2^-precision.
  BigInt n = shifted(num.mantissa(), den.exponent() + precision_bits);
  BigInt d = shifted(den.mantissa(), num.exponent());
  return Dyadic::from_parts(n / d, precision_bits);
}

Dyadic floor_div(const Dyadic& value, std::uint64_t divisor, std::uint64_t precision_bits) {
  return floor_ratio(value, Dyadic(divisor), precision_bits);
}

Dyadic ceil_ratio(const Dyadic& num, const Dyadic& den, std::uint64_t precision_bits) {
  if (den.is_zero()) {
    throw std::invalid_argument("ceil_ratio: zero denominator");
  }
  BigInt n = shifted(num.mantissa(), den.exponent() + precision_bits);
  BigInt d = shifted(den.mantissa(), num.exponent());
  return Dyadic::from_parts((n + d - 1) / d, precision_bits);
}

}  // namespace ktlab
