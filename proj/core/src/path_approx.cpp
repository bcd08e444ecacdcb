#include "ktlab/path_approx.hpp"

namespace ktlab {

bool PathApprox::bit(std::uint64_t index) const {
  auto it = bits_.find(index);
  return it != bits_.end() && it->second;
}

void PathApprox::set(std::uint64_t index, bool value, std::uint64_t step) {
  if (bit(index) == value) {
    return;
  }
  bits_[index] = value;
  ++change_counts_[index];
  last_change_step_ = step;
}

std::uint64_t PathApprox::changes(std::uint64_t index) const {
  auto it = change_counts_.find(index);
  return it == change_counts_.end() ? 0 : it->second;
}

Node PathApprox::prefix(std::uint64_t n) const {
  std::string bits(n, '0');
  for (auto it = bits_.lower_bound(0); it != bits_.end() && it->first < n; ++it) {
    if (it->second) {
      bits[it->first] = '1';
    }
  }
  return Node(std::move(bits));
}

bool PathApprox::passes_through(const Node& node) const {
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (bit(i) != node.bit(i)) {
      return false;
    }
  }
  return true;
}

}  // namespace ktlab
