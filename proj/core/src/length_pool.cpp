#include "ktlab/length_pool.hpp"

#include <numeric>
#include <stdexcept>

namespace ktlab {

LengthPool::LengthPool(std::uint64_t offset, std::uint64_t stride)
    : offset_(offset), stride_(stride) {
  if (stride_ == 0) {
    throw std::invalid_argument("pool stride must be positive");
  }
}

std::uint64_t LengthPool::first_above(std::uint64_t bound) const {
  if (offset_ > bound) {
    return offset_;
  }
  const std::uint64_t steps = (bound - offset_) / stride_ + 1;
  return offset_ + steps * stride_;
}

std::vector<LengthPool> LengthPool::split(std::uint64_t parts) const {
  if (parts < 2) {
    throw std::invalid_argument("split needs at least 2 parts");
  }
  std::vector<LengthPool> out;
  out.reserve(parts);
  for (std::uint64_t i = 0; i < parts; ++i) {
    out.emplace_back(offset_ + i * stride_, stride_ * parts);
  }
  return out;
}

LengthPool LengthPool::countable_part(std::uint64_t k) const {
  if (k < 1) {
    throw std::invalid_argument("countable schedule index starts at 1");
  }
  if (k >= 60) {
    throw std::invalid_argument("countable schedule index too large");
  }
  // Indices n with v2(n+1) = k-1, i.e. n = (2^(k-1) - 1) + j * 2^k.
  const std::uint64_t first = (std::uint64_t(1) << (k - 1)) - 1;
  const std::uint64_t step = std::uint64_t(1) << k;
  return LengthPool(offset_ + first * stride_, stride_ * step);
}

bool LengthPool::intersects(const LengthPool& other) const {
  // Progressions o1 + s1*N and o2 + s2*N (both infinite) share a value iff
  // o1 == o2 (mod gcd(s1, s2)) and the first common solution lies above both
  // offsets, which for nonnegative progressions it always does.
  const std::uint64_t g = std::gcd(stride_, other.stride_);
  return offset_ % g == other.offset_ % g;
}

}  // namespace ktlab
