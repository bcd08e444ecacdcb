#include "ktlab/strategy_solovay.hpp"

#include <algorithm>

namespace ktlab {

SolovayStrategy::SolovayStrategy(std::vector<ScriptedEvent> scripted)
    : scripted_(std::move(scripted)) {
  std::stable_sort(scripted_.begin(), scripted_.end(),
                   [](const ScriptedEvent& a, const ScriptedEvent& b) { return a.step < b.step; });
}

Node SolovayStrategy::path_prefix(std::uint64_t n) const {
  std::string bits(n, '0');
  for (std::uint64_t u : a_) {
    if (u < n) {
      bits[u] = '1';
    }
  }
  return Node(std::move(bits));
}

Dyadic SolovayStrategy::cost(std::uint64_t u) const {
  Dyadic total;
  for (const auto& [node, weight] : placed_) {
    if (node.size() >= u && path_prefix(node.size()) == node) {
      total += weight;
    }
  }
  return total;
}

bool SolovayStrategy::consider(std::uint64_t n, std::uint64_t u) const {
  if (n < 1 || handled_.count(n) || u <= 2 * n) {
    return false;
  }
  return cost(u) < Dyadic::pow2_neg(n);
}

void SolovayStrategy::replicate(std::uint64_t length, const Dyadic& delta,
                                std::vector<Action>& actions) {
  const Node target = path_prefix(length);
  actions.push_back(IncNode{target, delta});
  placed_[target] += delta;
}

Move SolovayStrategy::next(const GameState& state, const Trace& trace) {
  Move move{Player::us, {}};

  // New opponent activity since our last turn.
  std::vector<std::pair<std::uint64_t, Dyadic>> increases;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates;  // (n, u)
  for (; consumed_ < trace.records.size(); ++consumed_) {
    const TraceRecord& r = trace.records[consumed_];
    if (r.player != Player::opponent) {
      continue;
    }
    if (const auto* a = std::get_if<IncLength>(&r.action)) {
      increases.emplace_back(a->length, a->delta);
    } else if (const auto* a = std::get_if<InsertWn>(&r.action)) {
      candidates.emplace_back(a->set_index, a->element);
    }
  }
  while (scripted_done_ < scripted_.size() && scripted_[scripted_done_].step <= state.step()) {
    candidates.emplace_back(scripted_[scripted_done_].set_index,
                            scripted_[scripted_done_].element);
    ++scripted_done_;
  }

  // Mirror the opponent's fresh weight on the current path.
  for (const auto& [length, delta] : increases) {
    mu_[length] += delta;
    replicate(length, delta, move.actions);
  }

  // Admit candidates in increasing n, then increasing u.
  std::sort(candidates.begin(), candidates.end());
  for (const auto& [n, u] : candidates) {
    if (!consider(n, u)) {
      continue;
    }
    move.actions.push_back(InsertW{u});
    a_.insert(u);
    handled_.insert(n);
    // Everything we had above level u sat on prefixes containing bit u = 0;
    // those left the path, so the opponent's weights there must be mirrored
    // again on the new prefixes.
    for (const auto& [length, weight] : mu_) {
      if (length <= u || weight.is_zero()) {
        continue;
      }
      const Node fresh = path_prefix(length);
      auto it = placed_.find(fresh);
      const Dyadic already = it == placed_.end() ? Dyadic() : it->second;
      if (already < weight) {
        const Dyadic delta = weight - already;
        move.actions.push_back(IncNode{fresh, delta});
        placed_[fresh] += delta;
      }
    }
  }
  return move;
}

}  // namespace ktlab
