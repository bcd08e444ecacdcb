#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "ktlab/engine.hpp"
#include "ktlab/oracle_machine.hpp"

namespace ktlab {

/// Replays the recorded moves of one player from an existing trace,
/// passing on steps with no record. Used for deterministic reconstruction.
class TracePlaybackStrategy : public Strategy {
 public:
  TracePlaybackStrategy(const Trace& trace, Player who) : trace_(&trace), who_(who) {}

  Move next(const GameState& state, const Trace&) override;

 private:
  const Trace* trace_;
  Player who_;
  std::size_t idx_ = 0;
};

/// Existence-game opponent: ignores our moves, drips mu(n) = 2^-(n+1) over
/// the first `drip_lengths` lengths in a seeded random order, and enumerates
/// scripted W_n streams. Fully determined by the configuration.
class BlindExistenceOpponent : public Strategy {
 public:
  struct Config {
    std::uint64_t seed = 1;
    std::uint64_t drip_lengths = 64;
    std::uint64_t wn_streams = 16;
    std::uint64_t elements_per_stream = 8;
  };
  explicit BlindExistenceOpponent(const Config& config);

  Move next(const GameState& state, const Trace& trace) override;

 private:
  std::vector<std::uint64_t> drip_order_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> wn_events_;  // (n, u)
  std::uint64_t moves_made_ = 0;
  std::size_t wn_done_ = 0;
};

/// Engages the path through a fixed node and then refuses to ever match.
class RefusingOpponent : public Strategy {
 public:
  explicit RefusingOpponent(Node engage) : engage_(std::move(engage)) {}

  Move next(const GameState& state, const Trace& trace) override;

 private:
  Node engage_;
  bool engaged_ = false;
};

/// The survival-seeking matcher for the reduction games: it keeps every
/// probed point convergent to 0 by steering the path through a strong node,
/// strictly matches our length weights along the current path, and on every
/// W-insertion escapes to a 1-output prefix and re-matches everything along
/// the new path. All decisions are table lookups; no hidden state.
class MatchingEscaperOpponent : public Strategy {
 public:
  struct Config {
    std::shared_ptr<const OracleMachine> gamma;
    Dyadic quantum = Dyadic::pow2_neg(96);
    std::uint64_t depth = 512;
  };
  explicit MatchingEscaperOpponent(Config config);

  Move next(const GameState& state, const Trace& trace) override;

 private:
  void handle_probe(std::uint64_t m);
  void handle_insert(std::uint64_t m);

  Config cfg_;
  std::size_t consumed_ = 0;
  std::map<std::uint64_t, bool> desired_;  // bit assignment we steer toward
  std::set<std::uint64_t> dirty_lengths_;  // lengths touched since our last move
  bool full_rematch_ = false;
};

/// Lowness opponent that moves the path to a fixed target once and then
/// strictly matches every fresh portion along it. Never abandons a node.
class LownessMatchingOpponent : public Strategy {
 public:
  struct Config {
    Node target_path;
    Dyadic quantum = Dyadic::pow2_neg(96);
  };
  explicit LownessMatchingOpponent(Config config) : cfg_(std::move(config)) {}

  Move next(const GameState& state, const Trace& trace) override;

 private:
  Config cfg_;
  std::size_t consumed_ = 0;
  bool engaged_ = false;
  std::set<std::uint64_t> dirty_lengths_;
};

/// Lowness opponent that matches but keeps abandoning fulfilled labels:
/// every time our strategy pays an object, it flips the next bit (walking
/// the 1^e 0... path family), forcing us to spend over and over. Once our
/// strategy goes quiet it re-matches everything along the final path.
class ChurnOpponent : public Strategy {
 public:
  struct Config {
    Dyadic quantum = Dyadic::pow2_neg(96);
    std::uint64_t quiet_rounds = 3;  // our consecutive silent turns = stopped
  };
  explicit ChurnOpponent(Config config) : cfg_(std::move(config)) {}

  Move next(const GameState& state, const Trace& trace) override;

 private:
  Config cfg_;
  std::size_t consumed_ = 0;
  std::uint64_t epoch_ = 0;
  std::uint64_t pending_flips_ = 0;
  std::uint64_t last_our_action_step_ = 0;
  bool final_rematch_done_ = false;
  std::set<std::uint64_t> dirty_lengths_;
};

}  // namespace ktlab
