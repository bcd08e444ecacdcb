#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ktlab/game.hpp"

namespace ktlab {

/// One applied action. Pass moves leave no records; step numbers are
/// explicit, so replay reconstructs the exact move sequence anyway.
struct TraceRecord {
  std::uint64_t step;
  Player player;
  Action action;
};

/// Full record of a finished (or violated) run: enough, together with the
/// variant parameters, to rebuild the final state and every verdict.
/// Round-trips bit-exactly through save/load.
class Trace {
 public:
  std::string variant;  // existence | incompleteness | lowness
  Dyadic our_budget;
  Dyadic opponent_budget;
  std::uint64_t horizon = 0;
  std::vector<TraceRecord> records;
  std::optional<Violation> violation;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static Trace load(std::istream& in, const std::string& origin);
  static Trace load_file(const std::string& path);
};

std::string action_to_line(std::uint64_t step, Player player, const Action& action);

struct ReplayOutcome {
  GameState state;
  std::optional<Violation> violation;
  /// Lowness bookkeeping: object total <= length total after every step.
  bool object_le_length = true;
};

/// Re-executes a trace against a fresh game, validating every move. Detects
/// hand-edited violations; replaying a clean trace twice gives identical
/// states (the determinism oracle).
ReplayOutcome replay(const Trace& trace, const GameVariant& variant);

}  // namespace ktlab
