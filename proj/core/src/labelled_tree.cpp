#include "ktlab/labelled_tree.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ktlab {

ExplicitLabelledTree::ExplicitLabelledTree(std::map<Node, Label> labels)
    : labels_(std::move(labels)) {
  // Per-path sums are bounded by 1: it is enough to check the path to each
  // labelled node, since any path's sum equals the sum at its deepest
  // labelled prefix.
  for (const auto& [node, label] : labels_) {
    Dyadic sum;
    for (const auto& [other, other_label] : labels_) {
      if (other.is_prefix_of(node)) {
        sum += other_label.eta;
      }
    }
    if (Dyadic(1) < sum) {
      throw std::invalid_argument("label sum along path to " + node.str() + " exceeds 1");
    }
  }
}

std::optional<Label> ExplicitLabelledTree::label(const Node& node) const {
  auto it = labels_.find(node);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::shared_ptr<const ExplicitLabelledTree> ExplicitLabelledTree::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open label file: " + path);
  }
  return parse(in, path);
}

std::shared_ptr<const ExplicitLabelledTree> ExplicitLabelledTree::parse(
    std::istream& in, const std::string& origin) {
  std::map<Node, Label> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string node_text, mant;
    std::uint64_t object = 0, exponent = 0;
    if (!(fields >> node_text >> object >> mant >> exponent)) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected 'node object mantissa exponent'");
    }
    Node node = Node::parse(node_text);
    if (labels.count(node)) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": node " +
                                  node.str() + " labelled twice");
    }
    labels.emplace(node, Label{object, Dyadic::from_parts(BigInt(mant), exponent)});
  }
  return std::make_shared<const ExplicitLabelledTree>(std::move(labels));
}

SemimeasureMachine::SemimeasureMachine(std::vector<Emission> emissions)
    : emissions_(std::move(emissions)) {
  std::stable_sort(emissions_.begin(), emissions_.end(),
                   [](const Emission& a, const Emission& b) { return a.stamp < b.stamp; });
}

SemimeasureMachine SemimeasureMachine::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open semimeasure machine table: " + path);
  }
  return parse(in, path);
}

SemimeasureMachine SemimeasureMachine::parse(std::istream& in, const std::string& origin) {
  std::vector<Emission> emissions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string prefix, mant;
    std::uint64_t object = 0, exponent = 0, stamp = 0;
    if (!(fields >> prefix >> object >> mant >> exponent >> stamp)) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected 'prefix object mantissa exponent stamp'");
    }
    emissions.push_back(Emission{Node::parse(prefix), object,
                                 Dyadic::from_parts(BigInt(mant), exponent), stamp});
  }
  return SemimeasureMachine(std::move(emissions));
}

std::vector<SemimeasureMachine::Emission> SemimeasureMachine::emissions_along(
    const Node& oracle_prefix, std::uint64_t steps) const {
  std::vector<Emission> out;
  for (const Emission& e : emissions_) {
    if (e.stamp <= steps && e.prefix.is_prefix_of(oracle_prefix)) {
      out.push_back(e);
    }
  }
  return out;
}

MachineLabelledTree::MachineLabelledTree(SemimeasureMachine machine, std::uint64_t depth,
                                         std::uint64_t steps)
    : machine_(std::move(machine)), depth_(depth), steps_(steps) {}

std::optional<Label> MachineLabelledTree::label(const Node& node) const {
  // Walk from the root to `node`, maintaining the queue of requests that
  // became visible on the way and have not yet been consumed by a shallower
  // node. Each node consumes exactly the queue head; the head at `node`
  // (trimmed against the path budget) is its label.
  std::deque<SemimeasureMachine::Emission> queue;
  Dyadic consumed;
  for (std::size_t d = 0; d <= node.size(); ++d) {
    const Node here = node.prefix(d);
    if (here.size() <= depth_) {
      for (const auto& e : machine_.emissions()) {
        if (e.stamp <= steps_ && e.prefix == here) {
          queue.push_back(e);
        }
      }
    }
    const bool at_target = d == node.size();
    if (queue.empty()) {
      if (at_target) {
        return std::nullopt;
      }
      continue;
    }
    SemimeasureMachine::Emission head = queue.front();
    queue.pop_front();
    Dyadic eta = head.delta;
    const Dyadic room = Dyadic(1) - consumed;
    if (room < eta) {
      eta = room;  // trim: keep every path a semimeasure
    }
    consumed += eta;
    if (at_target) {
      return Label{head.object, eta};
    }
  }
  return std::nullopt;
}

std::shared_ptr<const LabelledTree> machine_to_labels(SemimeasureMachine machine,
                                                      std::uint64_t depth, std::uint64_t steps) {
  return std::make_shared<const MachineLabelledTree>(std::move(machine), depth, steps);
}

}  // namespace ktlab
