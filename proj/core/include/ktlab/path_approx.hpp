#pragma once

#include <cstdint>
#include <map>

#include "ktlab/node.hpp"

namespace ktlab {

/// Mutable finite approximation of the opponent's infinite sequence. Bits
/// default to 0; only finitely many are ever set. Change counts per index
/// and the step of the last change are tracked so audits can report when
/// the path became stable.
class PathApprox {
 public:
  bool bit(std::uint64_t index) const;

  /// Sets bit `index` to `value` at `step`. Setting a bit to its current
  /// value is a no-op and does not count as a change.
  void set(std::uint64_t index, bool value, std::uint64_t step);

  std::uint64_t changes(std::uint64_t index) const;

  /// Step of the last actual bit change anywhere, 0 if the path never moved.
  std::uint64_t stable_since() const { return last_change_step_; }

  /// The current n-bit prefix as a tree node.
  Node prefix(std::uint64_t n) const;

  bool passes_through(const Node& node) const;

  bool operator==(const PathApprox& other) const {
    return bits_ == other.bits_ && change_counts_ == other.change_counts_ &&
           last_change_step_ == other.last_change_step_;
  }

 private:
  std::map<std::uint64_t, bool> bits_;
  std::map<std::uint64_t, std::uint64_t> change_counts_;
  std::uint64_t last_change_step_ = 0;
};

}  // namespace ktlab
