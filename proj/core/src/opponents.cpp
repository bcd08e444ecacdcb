#include "ktlab/opponents.hpp"

#include <algorithm>
#include <random>

namespace ktlab {

namespace {

Node overridden_prefix(const PathApprox& path, const std::map<std::uint64_t, bool>& overrides,
                       std::uint64_t n) {
  std::string bits(n, '0');
  for (std::uint64_t i = 0; i < n; ++i) {
    if (path.bit(i)) {
      bits[i] = '1';
    }
  }
  for (const auto& [index, value] : overrides) {
    if (index < n) {
      bits[index] = value ? '1' : '0';
    }
  }
  return Node(std::move(bits));
}

/// Strictly covers `need` at `prefix` if the budget allows; returns the
/// emitted delta (zero when nothing was needed or affordable).
Dyadic match_at(const GameState& state, const Node& prefix, const Dyadic& need,
                const Dyadic& quantum, Dyadic& pending, std::vector<Action>& actions) {
  const Dyadic& have = state.nodes().at(prefix);
  if (need < have) {
    return Dyadic();
  }
  const Dyadic delta = need - have + quantum;
  if (state.nodes().budget() < state.nodes().total() + pending + delta) {
    return Dyadic();  // out of budget: leave unmatched
  }
  pending += delta;
  actions.push_back(IncNode{prefix, delta});
  return delta;
}

}  // namespace

Move TracePlaybackStrategy::next(const GameState& state, const Trace&) {
  const std::uint64_t at_step = state.step() + 1;
  Move move{who_, {}};
  const auto& records = trace_->records;
  while (idx_ < records.size() && records[idx_].step < at_step) {
    ++idx_;
  }
  while (idx_ < records.size() && records[idx_].step == at_step &&
         records[idx_].player == who_) {
    move.actions.push_back(records[idx_].action);
    ++idx_;
  }
  return move;
}

BlindExistenceOpponent::BlindExistenceOpponent(const Config& config) {
  drip_order_.resize(config.drip_lengths);
  for (std::uint64_t i = 0; i < config.drip_lengths; ++i) {
    drip_order_[i] = i + 1;
  }
  // Fisher-Yates with raw engine draws: the mt19937_64 sequence is fixed by
  // the standard, so the trace is reproducible from the seed alone.
  std::mt19937_64 rng(config.seed);
  for (std::uint64_t i = config.drip_lengths; i > 1; --i) {
    const std::uint64_t j = rng() % i;
    std::swap(drip_order_[i - 1], drip_order_[j]);
  }
  for (std::uint64_t round = 0; round < config.elements_per_stream; ++round) {
    for (std::uint64_t n = 1; n <= config.wn_streams; ++n) {
      wn_events_.emplace_back(n, 2 * n + 1 + 5 * round);
    }
  }
}

Move BlindExistenceOpponent::next(const GameState& state, const Trace&) {
  Move move{Player::opponent, {}};
  ++moves_made_;
  if (moves_made_ <= drip_order_.size()) {
    const std::uint64_t n = drip_order_[moves_made_ - 1];
    move.actions.push_back(IncLength{n, Dyadic::pow2_neg(n + 1)});
  }
  if (moves_made_ % 3 == 0 && wn_done_ < wn_events_.size()) {
    const auto [n, u] = wn_events_[wn_done_++];
    move.actions.push_back(InsertWn{n, u});
  }
  (void)state;
  return move;
}

Move RefusingOpponent::next(const GameState& state, const Trace&) {
  Move move{Player::opponent, {}};
  if (!engaged_) {
    engaged_ = true;
    for (std::size_t i = 0; i < engage_.size(); ++i) {
      if (state.path().bit(i) != engage_.bit(i)) {
        move.actions.push_back(FlipBit{i, engage_.bit(i)});
      }
    }
  }
  return move;
}

MatchingEscaperOpponent::MatchingEscaperOpponent(Config config) : cfg_(std::move(config)) {
  if (!cfg_.gamma) {
    throw std::invalid_argument("matching opponent needs the oracle table");
  }
}

void MatchingEscaperOpponent::handle_probe(std::uint64_t m) {
  // Keep the probed point convergent to 0: steer through the first minimal
  // strong node consistent with the bits already promised.
  for (const Node& u : cfg_.gamma->minimal_strong(m, cfg_.depth, cfg_.depth)) {
    bool consistent = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto it = desired_.find(i);
      if (it != desired_.end() && it->second != u.bit(i)) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        desired_[i] = u.bit(i);
      }
      return;
    }
  }
}

void MatchingEscaperOpponent::handle_insert(std::uint64_t m) {
  // The point entered W: survival now needs Gamma = 1, so relocate to the
  // first 1-output prefix (overriding promised bits) and pay to re-match.
  std::vector<Node> ones;
  for (const auto& e : cfg_.gamma->entries()) {
    if (e.input == m && e.output) {
      ones.push_back(e.prefix);
    }
  }
  std::sort(ones.begin(), ones.end(), [](const Node& a, const Node& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  if (ones.empty()) {
    return;  // no escape exists; stay and lose the reduction point
  }
  const Node& target = ones.front();
  for (std::size_t i = 0; i < target.size(); ++i) {
    desired_[i] = target.bit(i);
  }
  full_rematch_ = true;
}

Move MatchingEscaperOpponent::next(const GameState& state, const Trace& trace) {
  for (; consumed_ < trace.records.size(); ++consumed_) {
    const TraceRecord& r = trace.records[consumed_];
    if (r.player != Player::us) {
      continue;
    }
    if (const auto* a = std::get_if<Probe>(&r.action)) {
      handle_probe(a->point);
    } else if (const auto* a = std::get_if<InsertW>(&r.action)) {
      handle_insert(a->element);
    } else if (const auto* a = std::get_if<IncLength>(&r.action)) {
      dirty_lengths_.insert(a->length);
    }
  }

  Move move{Player::opponent, {}};
  for (const auto& [index, value] : desired_) {
    if (state.path().bit(index) != value) {
      move.actions.push_back(FlipBit{index, value});
    }
  }
  std::vector<std::uint64_t> to_match;
  if (full_rematch_) {
    for (const auto& [length, weight] : state.lengths().entries()) {
      if (!weight.is_zero()) {
        to_match.push_back(length);
      }
    }
  } else {
    to_match.assign(dirty_lengths_.begin(), dirty_lengths_.end());
  }
  Dyadic pending;
  for (std::uint64_t l : to_match) {
    const Dyadic& need = state.lengths().at(l);
    if (need.is_zero()) {
      continue;
    }
    match_at(state, overridden_prefix(state.path(), desired_, l), need, cfg_.quantum, pending,
             move.actions);
  }
  dirty_lengths_.clear();
  full_rematch_ = false;
  return move;
}

Move LownessMatchingOpponent::next(const GameState& state, const Trace& trace) {
  for (; consumed_ < trace.records.size(); ++consumed_) {
    const TraceRecord& r = trace.records[consumed_];
    if (r.player != Player::us) {
      continue;
    }
    if (const auto* a = std::get_if<IncLength>(&r.action)) {
      dirty_lengths_.insert(a->length);
    }
  }
  Move move{Player::opponent, {}};
  std::map<std::uint64_t, bool> overrides;
  for (std::size_t i = 0; i < cfg_.target_path.size(); ++i) {
    overrides[i] = cfg_.target_path.bit(i);
  }
  if (!engaged_) {
    engaged_ = true;
    for (const auto& [index, value] : overrides) {
      if (state.path().bit(index) != value) {
        move.actions.push_back(FlipBit{index, value});
      }
    }
  }
  Dyadic pending;
  for (std::uint64_t l : dirty_lengths_) {
    match_at(state, overridden_prefix(state.path(), overrides, l), state.lengths().at(l),
             cfg_.quantum, pending, move.actions);
  }
  dirty_lengths_.clear();
  return move;
}

Move ChurnOpponent::next(const GameState& state, const Trace& trace) {
  for (; consumed_ < trace.records.size(); ++consumed_) {
    const TraceRecord& r = trace.records[consumed_];
    if (r.player != Player::us) {
      continue;
    }
    last_our_action_step_ = r.step;
    if (const auto* a = std::get_if<IncLength>(&r.action)) {
      dirty_lengths_.insert(a->length);
    } else if (std::get_if<IncObject>(&r.action)) {
      ++pending_flips_;
    }
  }

  Move move{Player::opponent, {}};
  while (pending_flips_ > 0) {
    // A label got paid: abandon it by extending the 1-run one bit further.
    move.actions.push_back(FlipBit{epoch_, true});
    ++epoch_;
    --pending_flips_;
  }

  std::map<std::uint64_t, bool> overrides;
  for (std::uint64_t i = 0; i < epoch_; ++i) {
    overrides[i] = true;
  }

  const bool our_side_quiet =
      state.step() > last_our_action_step_ + 2 * cfg_.quiet_rounds && epoch_ > 0;
  std::vector<std::uint64_t> to_match(dirty_lengths_.begin(), dirty_lengths_.end());
  if (our_side_quiet && !final_rematch_done_) {
    final_rematch_done_ = true;
    to_match.clear();
    for (const auto& [length, weight] : state.lengths().entries()) {
      if (!weight.is_zero()) {
        to_match.push_back(length);
      }
    }
  }
  Dyadic pending;
  for (std::uint64_t l : to_match) {
    const Dyadic& need = state.lengths().at(l);
    if (need.is_zero()) {
      continue;
    }
    match_at(state, overridden_prefix(state.path(), overrides, l), need, cfg_.quantum, pending,
             move.actions);
  }
  dirty_lengths_.clear();
  return move;
}

}  // namespace ktlab
