#include "ktlab/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktlab {

const char* to_string(Player p) { return p == Player::us ? "us" : "opp"; }

Player player_from_string(const std::string& s) {
  if (s == "us") return Player::us;
  if (s == "opp") return Player::opponent;
  throw std::invalid_argument("bad player: " + s);
}

const char* variant_name(const GameVariant& v) {
  switch (v.index()) {
    case 0: return "existence";
    case 1: return "incompleteness";
    default: return "lowness";
  }
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::budget: return "budget";
    case ViolationKind::shrink: return "shrink";
    case ViolationKind::turn_order: return "turn-order";
    case ViolationKind::ownership: return "ownership";
  }
  return "?";
}

ViolationKind violation_kind_from_string(const std::string& s) {
  if (s == "budget") return ViolationKind::budget;
  if (s == "shrink") return ViolationKind::shrink;
  if (s == "turn-order") return ViolationKind::turn_order;
  if (s == "ownership") return ViolationKind::ownership;
  throw std::invalid_argument("bad violation kind: " + s);
}

GameState::GameState(GameVariant variant, Dyadic our_budget, Dyadic opponent_budget)
    : variant_(std::move(variant)),
      our_budget_(std::move(our_budget)),
      opponent_budget_(std::move(opponent_budget)) {
  if (our_budget_.is_zero() || opponent_budget_.is_zero()) {
    throw std::invalid_argument("game budgets must be positive");
  }
  const bool existence = std::holds_alternative<ExistenceVariant>(variant_);
  const bool lowness = std::holds_alternative<LownessVariant>(variant_);
  // In the existence game we own the node weights and the opponent owns the
  // lengths; in the other games it is the other way around.
  lengths_ = WeightLedger<std::uint64_t>(existence ? opponent_budget_ : our_budget_);
  nodes_ = WeightLedger<Node>(existence ? our_budget_ : opponent_budget_);
  objects_ = WeightLedger<std::uint64_t>(lowness ? our_budget_ : Dyadic(0));
}

std::optional<Violation> GameState::validate(const Move& move, std::uint64_t at_step) const {
  if (move.player != whose_turn()) {
    return Violation{ViolationKind::turn_order, move.player, at_step, "out-of-turn"};
  }
  const bool existence = std::holds_alternative<ExistenceVariant>(variant_);
  const bool lowness = std::holds_alternative<LownessVariant>(variant_);
  const bool us = move.player == Player::us;

  Dyadic pending_lengths, pending_nodes, pending_objects;
  for (const Action& action : move.actions) {
    if (const auto* a = std::get_if<IncLength>(&action)) {
      const bool owns = existence ? !us : us;
      if (!owns) {
        return Violation{ViolationKind::ownership, move.player, at_step, "lengths"};
      }
      pending_lengths += a->delta;
      if (lengths_.would_exceed(pending_lengths)) {
        return Violation{ViolationKind::budget, move.player, at_step,
                         "lengths@" + std::to_string(a->length)};
      }
    } else if (const auto* a = std::get_if<IncNode>(&action)) {
      const bool owns = existence ? us : !us;
      if (!owns) {
        return Violation{ViolationKind::ownership, move.player, at_step, "nodes"};
      }
      pending_nodes += a->delta;
      if (nodes_.would_exceed(pending_nodes)) {
        return Violation{ViolationKind::budget, move.player, at_step, "nodes@" + a->node.str()};
      }
    } else if (const auto* a = std::get_if<IncObject>(&action)) {
      if (!lowness || !us) {
        return Violation{ViolationKind::ownership, move.player, at_step, "objects"};
      }
      pending_objects += a->delta;
      if (objects_.would_exceed(pending_objects)) {
        return Violation{ViolationKind::budget, move.player, at_step,
                         "objects@" + std::to_string(a->object)};
      }
    } else if (const auto* a = std::get_if<FlipBit>(&action)) {
      if (existence) {
        // The path is the characteristic sequence of A; nobody may edit it
        // directly. Clearing a bit of an inserted element would shrink A.
        const bool shrinks = !a->value && w_.count(a->index) > 0;
        return Violation{shrinks ? ViolationKind::shrink : ViolationKind::ownership, move.player,
                         at_step, "flip@" + std::to_string(a->index)};
      }
      if (us) {
        return Violation{ViolationKind::ownership, move.player, at_step, "flip"};
      }
    } else if (std::get_if<InsertW>(&action)) {
      if (lowness || !us) {
        return Violation{ViolationKind::ownership, move.player, at_step, "w"};
      }
    } else if (const auto* a = std::get_if<InsertWn>(&action)) {
      if (!existence || us) {
        return Violation{ViolationKind::ownership, move.player, at_step,
                         "wn@" + std::to_string(a->set_index)};
      }
    } else if (std::get_if<Probe>(&action)) {
      if (!std::holds_alternative<IncompletenessVariant>(variant_) || !us) {
        return Violation{ViolationKind::ownership, move.player, at_step, "probe"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> GameState::apply(const Move& move) {
  const std::uint64_t at_step = step_ + 1;
  if (auto v = validate(move, at_step)) {
    return v;
  }
  const bool existence = std::holds_alternative<ExistenceVariant>(variant_);
  for (const Action& action : move.actions) {
    if (const auto* a = std::get_if<IncLength>(&action)) {
      lengths_.try_increase(a->length, a->delta, at_step);
    } else if (const auto* a = std::get_if<IncNode>(&action)) {
      nodes_.try_increase(a->node, a->delta, at_step);
    } else if (const auto* a = std::get_if<IncObject>(&action)) {
      objects_.try_increase(a->object, a->delta, at_step);
    } else if (const auto* a = std::get_if<FlipBit>(&action)) {
      path_.set(a->index, a->value, at_step);
    } else if (const auto* a = std::get_if<InsertW>(&action)) {
      if (w_.insert(a->element).second && existence) {
        // A grew: its characteristic path gains a 1 at the new element.
        path_.set(a->element, true, at_step);
      }
    } else if (const auto* a = std::get_if<InsertWn>(&action)) {
      w_sets_[a->set_index].insert(a->element);
    } else if (const auto* a = std::get_if<Probe>(&action)) {
      if (std::find(probes_.begin(), probes_.end(), a->point) == probes_.end()) {
        probes_.push_back(a->point);
      }
    }
  }
  step_ = at_step;
  return std::nullopt;
}

bool GameState::operator==(const GameState& other) const {
  return step_ == other.step_ && path_ == other.path_ && lengths_ == other.lengths_ &&
         nodes_ == other.nodes_ && objects_ == other.objects_ && w_ == other.w_ &&
         w_sets_ == other.w_sets_ && probes_ == other.probes_;
}

}  // namespace ktlab
