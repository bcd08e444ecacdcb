#include "ktlab/node.hpp"

#include <stdexcept>

namespace ktlab {

Node::Node(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("node bits must be 0/1, got: " + bits_);
    }
  }
}

Node Node::parse(const std::string& text) {
  if (text == "-") {
    return Node();
  }
  return Node(text);
}

Node Node::sibling() const {
  if (bits_.empty()) {
    throw std::invalid_argument("root node has no sibling");
  }
  std::string b = bits_;
  b.back() = b.back() == '0' ? '1' : '0';
  return Node(std::move(b));
}

}  // namespace ktlab
