#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ktlab/dyadic.hpp"
#include "ktlab/labelled_tree.hpp"
#include "ktlab/ledger.hpp"
#include "ktlab/node.hpp"
#include "ktlab/oracle_machine.hpp"
#include "ktlab/path_approx.hpp"

namespace ktlab {

enum class Player : std::uint8_t { us, opponent };

const char* to_string(Player p);
Player player_from_string(const std::string& s);

/// The Solovay existence game: the opponent owns length weights and the
/// enumerations W_n; we own node weights and the grow-only set A (kept in
/// the W slot), whose characteristic sequence is the path.
struct ExistenceVariant {};

/// The c-Gamma game: the opponent owns the path and node weights; we own
/// length weights and the grow-only set W, and probe reduction points.
/// `c` absent means the unrestricted game (no constant declared up front).
struct IncompletenessVariant {
  std::optional<Dyadic> c;
  std::shared_ptr<const OracleMachine> gamma;
};

/// The lowness game: the opponent owns the path and node weights; we own
/// length and object weights, playing against the labelled-tree semimeasure.
struct LownessVariant {
  std::optional<Dyadic> c;
  std::shared_ptr<const LabelledTree> labels;
};

using GameVariant = std::variant<ExistenceVariant, IncompletenessVariant, LownessVariant>;

const char* variant_name(const GameVariant& v);

// Move actions. A move is a finite list of these, applied atomically.
struct IncLength {
  std::uint64_t length;
  Dyadic delta;
};
struct IncNode {
  Node node;
  Dyadic delta;
};
struct IncObject {
  std::uint64_t object;
  Dyadic delta;
};
struct FlipBit {
  std::uint64_t index;
  bool value;
};
struct InsertW {
  std::uint64_t element;
};
struct InsertWn {
  std::uint64_t set_index;
  std::uint64_t element;
};
/// No-op marker: records that our strategy challenges the reduction at this
/// point, so the audit (a pure function of the trace) knows what to check.
struct Probe {
  std::uint64_t point;
};

using Action = std::variant<IncLength, IncNode, IncObject, FlipBit, InsertW, InsertWn, Probe>;

struct Move {
  Player player = Player::us;
  std::vector<Action> actions;  // empty = pass
};

enum class ViolationKind : std::uint8_t { budget, shrink, turn_order, ownership };

const char* to_string(ViolationKind k);
ViolationKind violation_kind_from_string(const std::string& s);

struct Violation {
  ViolationKind kind;
  Player player;
  std::uint64_t step;
  std::string detail;  // single token, no spaces

  bool operator==(const Violation&) const = default;
};

/// Full game position. Slot ownership depends on the variant; apply()
/// validates each action against the owner map and the budgets, and either
/// applies the whole move or reports the first violation and changes
/// nothing.
class GameState {
 public:
  GameState(GameVariant variant, Dyadic our_budget, Dyadic opponent_budget);

  const GameVariant& variant() const { return variant_; }
  const Dyadic& our_budget() const { return our_budget_; }
  const Dyadic& opponent_budget() const { return opponent_budget_; }

  std::uint64_t step() const { return step_; }
  /// Strict alternation: the opponent moves on odd steps, we move on even.
  Player whose_turn() const { return (step_ + 1) % 2 == 1 ? Player::opponent : Player::us; }

  const PathApprox& path() const { return path_; }
  const WeightLedger<std::uint64_t>& lengths() const { return lengths_; }
  const WeightLedger<Node>& nodes() const { return nodes_; }
  const WeightLedger<std::uint64_t>& objects() const { return objects_; }
  const std::set<std::uint64_t>& w() const { return w_; }
  const std::map<std::uint64_t, std::set<std::uint64_t>>& w_sets() const { return w_sets_; }
  /// Probed points in first-probe order.
  const std::vector<std::uint64_t>& probes() const { return probes_; }

  std::optional<Violation> apply(const Move& move);

  bool operator==(const GameState& other) const;

 private:
  std::optional<Violation> validate(const Move& move, std::uint64_t at_step) const;

  GameVariant variant_;
  Dyadic our_budget_;
  Dyadic opponent_budget_;
  std::uint64_t step_ = 0;
  PathApprox path_;
  WeightLedger<std::uint64_t> lengths_;
  WeightLedger<Node> nodes_;
  WeightLedger<std::uint64_t> objects_;
  std::set<std::uint64_t> w_;
  std::map<std::uint64_t, std::set<std::uint64_t>> w_sets_;
  std::vector<std::uint64_t> probes_;
};

inline GameState new_game(GameVariant variant, Dyadic our_budget, Dyadic opponent_budget) {
  return GameState(std::move(variant), std::move(our_budget), std::move(opponent_budget));
}

}  // namespace ktlab
