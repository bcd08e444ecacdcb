#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktlab/node.hpp"
#include "ktlab/path_approx.hpp"

namespace ktlab {

/// A monotone partial map (input, oracle prefix, step bound) -> output bit,
/// modelling a Turing reduction driven from a declarative table. Each table
/// row gives the minimal oracle prefix that makes the machine converge on an
/// input; the machine converges on prefix u after |row prefix| steps whenever
/// a row prefix is a prefix of u. Monotonicity (agreeing outputs on
/// comparable prefixes for the same input) is validated at load.
class OracleMachine {
 public:
  struct Entry {
    std::uint64_t input;
    Node prefix;
    bool output;
  };

  OracleMachine() = default;
  explicit OracleMachine(std::vector<Entry> entries);

  /// File format: one entry per line, "input prefix output", prefix "-" for
  /// the empty string, blank lines and #-comments skipped.
  static OracleMachine load(const std::string& path);
  static OracleMachine parse(std::istream& in, const std::string& origin);

  /// nullopt = still pending within the step bound on this prefix.
  std::optional<bool> evaluate(std::uint64_t input, const Node& oracle_prefix,
                               std::uint64_t steps) const;

  /// Evaluates against a total path (bits beyond the set ones default to 0).
  std::optional<bool> evaluate_on_path(std::uint64_t input, const PathApprox& path,
                                       std::uint64_t steps) const;

  /// All strings u with |u| <= depth forcing output 0 on `input` within the
  /// step bound (queries confined to u). Monotone in depth and steps.
  /// Sorted by (length, lex); exponential in depth by nature.
  std::vector<Node> strong_strings(std::uint64_t input, std::uint64_t depth,
                                   std::uint64_t steps) const;

  /// Minimal strong strings only: the table prefixes with output 0 that have
  /// no shorter strong prefix, restricted to |u| <= depth. Every strong
  /// string extends one of these.
  std::vector<Node> minimal_strong(std::uint64_t input, std::uint64_t depth,
                                   std::uint64_t steps) const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  void validate() const;

  std::vector<Entry> entries_;
};

}  // namespace ktlab
