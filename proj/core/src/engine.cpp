#include "ktlab/engine.hpp"

#include <stdexcept>

namespace ktlab {

RunResult run(const GameVariant& variant, const Dyadic& our_budget, const Dyadic& opp_budget,
              Strategy& us, Strategy& opponent, std::uint64_t horizon) {
  if (horizon < 1) {
    throw std::invalid_argument("horizon must be at least 1");
  }
  RunResult result{Trace{}, GameState(variant, our_budget, opp_budget)};
  Trace& trace = result.trace;
  trace.variant = variant_name(variant);
  trace.our_budget = our_budget;
  trace.opponent_budget = opp_budget;
  trace.horizon = horizon;

  GameState& state = result.state;
  while (state.step() < horizon) {
    const Player mover = state.whose_turn();
    Strategy& active = mover == Player::us ? us : opponent;
    Move move = active.next(state, trace);
    move.player = mover;
    const std::uint64_t at_step = state.step() + 1;
    if (auto violation = state.apply(move)) {
      trace.violation = violation;
      break;
    }
    for (const Action& action : move.actions) {
      trace.records.push_back(TraceRecord{at_step, mover, action});
    }
  }
  return result;
}

}  // namespace ktlab
