#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ktlab/dyadic.hpp"

namespace ktlab {

/// A node of the full binary tree: a finite binary string, possibly empty.
/// Identified with the cylinder [bits] of measure 2^-|bits|.
class Node {
 public:
  Node() = default;
  explicit Node(std::string bits);

  static Node root() { return Node(); }

  /// Parses the textual form used in files and traces: "-" is the root
  /// (empty string), otherwise a run of 0/1 characters.
  static Node parse(const std::string& text);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool bit(std::size_t i) const { return bits_[i] == '1'; }

  Node child(bool one) const { return Node(bits_ + (one ? '1' : '0')); }
  Node prefix(std::size_t n) const { return Node(bits_.substr(0, n)); }
  Node parent() const { return Node(bits_.substr(0, bits_.empty() ? 0 : bits_.size() - 1)); }

  /// The sibling obtained by flipping the last bit; root has no sibling.
  Node sibling() const;

  Node concat(const Node& suffix) const { return Node(bits_ + suffix.bits_); }

  /// Drops a leading prefix; requires is_prefix_of to hold for `prefix`.
  Node suffix_after(const Node& prefix) const { return Node(bits_.substr(prefix.size())); }

  bool is_prefix_of(const Node& other) const {
    return other.bits_.compare(0, bits_.size(), bits_) == 0;
  }
  bool comparable_with(const Node& other) const {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  Dyadic measure() const { return Dyadic::pow2_neg(bits_.size()); }

  std::string str() const { return bits_.empty() ? "-" : bits_; }

  auto operator<=>(const Node& other) const = default;

 private:
  std::string bits_;
};

}  // namespace ktlab
