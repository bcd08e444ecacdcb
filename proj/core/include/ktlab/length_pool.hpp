#pragma once

#include <cstdint>
#include <vector>

namespace ktlab {

/// An infinite arithmetic progression {offset, offset+stride, ...} used to
/// hand out lengths and reserved points to strategy processes. Splitting
/// yields pairwise-disjoint sub-progressions covering the parent, so nested
/// strategies never touch each other's keys. Membership is O(1).
class LengthPool {
 public:
  LengthPool(std::uint64_t offset, std::uint64_t stride);

  std::uint64_t offset() const { return offset_; }
  std::uint64_t stride() const { return stride_; }

  std::uint64_t member(std::uint64_t index) const { return offset_ + index * stride_; }
  bool contains(std::uint64_t value) const {
    return value >= offset_ && (value - offset_) % stride_ == 0;
  }

  /// First member strictly greater than `bound`.
  std::uint64_t first_above(std::uint64_t bound) const;

  /// Splits into `parts` sub-progressions: part i takes members with
  /// index congruent to i mod parts. Disjoint, union equals the parent.
  std::vector<LengthPool> split(std::uint64_t parts) const;

  /// The k-th (k >= 1) piece of the countable splitting: members whose
  /// index n satisfies v2(n+1) = k-1, itself an arithmetic progression with
  /// stride 2^k * stride. The pieces for k = 1, 2, ... are pairwise
  /// disjoint and cover the pool (the odd / 2*odd / 4*odd pattern).
  LengthPool countable_part(std::uint64_t k) const;

  bool intersects(const LengthPool& other) const;

  bool operator==(const LengthPool& other) const = default;

 private:
  std::uint64_t offset_;
  std::uint64_t stride_;
};

}  // namespace ktlab
