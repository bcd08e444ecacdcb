#include "ktlab/oracle_machine.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktlab {

OracleMachine::OracleMachine(std::vector<Entry> entries) : entries_(std::move(entries)) {
  validate();
}

void OracleMachine::validate() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      const Entry& a = entries_[i];
      const Entry& b = entries_[j];
      if (a.input == b.input && a.prefix.comparable_with(b.prefix) && a.output != b.output) {
        throw std::invalid_argument("oracle table not monotone at input " +
                                    std::to_string(a.input) + ": prefixes " + a.prefix.str() +
                                    " and " + b.prefix.str() + " disagree");
      }
    }
  }
}

OracleMachine OracleMachine::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open oracle table: " + path);
  }
  return parse(in, path);
}

OracleMachine OracleMachine::parse(std::istream& in, const std::string& origin) {
  std::vector<Entry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::uint64_t input = 0;
    std::string prefix;
    int output = -1;
    if (!(fields >> input >> prefix >> output) || (output != 0 && output != 1)) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected 'input prefix bit'");
    }
    entries.push_back(Entry{input, Node::parse(prefix), output == 1});
  }
  return OracleMachine(std::move(entries));
}

std::optional<bool> OracleMachine::evaluate(std::uint64_t input, const Node& oracle_prefix,
                                            std::uint64_t steps) const {
  for (const Entry& e : entries_) {
    if (e.input == input && e.prefix.size() <= steps && e.prefix.is_prefix_of(oracle_prefix)) {
      return e.output;
    }
  }
  return std::nullopt;
}

std::optional<bool> OracleMachine::evaluate_on_path(std::uint64_t input, const PathApprox& path,
                                                    std::uint64_t steps) const {
  for (const Entry& e : entries_) {
    if (e.input == input && e.prefix.size() <= steps && path.passes_through(e.prefix)) {
      return e.output;
    }
  }
  return std::nullopt;
}

std::vector<Node> OracleMachine::minimal_strong(std::uint64_t input, std::uint64_t depth,
                                                std::uint64_t steps) const {
  std::vector<Node> candidates;
  for (const Entry& e : entries_) {
    if (e.input == input && !e.output && e.prefix.size() <= depth && e.prefix.size() <= steps) {
      candidates.push_back(e.prefix);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Node& a, const Node& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  std::vector<Node> minimal;
  for (const Node& c : candidates) {
    bool covered = false;
    for (const Node& m : minimal) {
      if (m.is_prefix_of(c)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      minimal.push_back(c);
    }
  }
  return minimal;
}

std::vector<Node> OracleMachine::strong_strings(std::uint64_t input, std::uint64_t depth,
                                                std::uint64_t steps) const {
  if (depth > 24) {
    throw std::invalid_argument("strong_strings enumeration depth too large");
  }
  const std::vector<Node> roots = minimal_strong(input, depth, steps);
  std::set<Node> out;
  for (const Node& r : roots) {
    // All extensions of r up to the requested depth.
    std::vector<Node> frontier{r};
    while (!frontier.empty()) {
      Node n = frontier.back();
      frontier.pop_back();
      out.insert(n);
      if (n.size() < depth) {
        frontier.push_back(n.child(false));
        frontier.push_back(n.child(true));
      }
    }
  }
  std::vector<Node> result(out.begin(), out.end());
  std::sort(result.begin(), result.end(), [](const Node& a, const Node& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return result;
}

}  // namespace ktlab
