#pragma once

#include <cstdint>

#include "ktlab/game.hpp"
#include "ktlab/trace.hpp"

namespace ktlab {

/// Observe-then-move interface shared by strategies and scripted opponents.
/// next() must be a deterministic function of the observed state and trace;
/// the engine calls it exactly once per turn.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Move next(const GameState& state, const Trace& trace) = 0;
};

/// Always passes.
class NoOpStrategy : public Strategy {
 public:
  Move next(const GameState& state, const Trace&) override {
    return Move{state.whose_turn(), {}};
  }
};

struct RunResult {
  Trace trace;
  GameState state;
};

/// Alternates moves (opponent on odd steps, us on even) up to the horizon.
/// A violating move terminates the run early with the violator recorded in
/// the trace.
RunResult run(const GameVariant& variant, const Dyadic& our_budget, const Dyadic& opp_budget,
              Strategy& us, Strategy& opponent, std::uint64_t horizon);

}  // namespace ktlab
