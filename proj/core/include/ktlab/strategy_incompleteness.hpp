#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ktlab/engine.hpp"
#include "ktlab/length_pool.hpp"
#include "ktlab/oracle_machine.hpp"

namespace ktlab {

/// Largest dyadic on the 2^-precision grid with 6*eps <= 2 - c: inverts the
/// "winning the (2-6eps)-game" bound to pick eps for a declared c < 2.
Dyadic epsilon_for(const Dyadic& c, std::uint64_t precision = 16);

struct IncompletenessConfig {
  /// Required coefficient of weight extraction; base behaviour below 2,
  /// recursive calls at k - 1/2 otherwise.
  Dyadic k;
  /// Budget of the top process; equal to our game budget in a plain run.
  Dyadic alpha;
  LengthPool lengths{2, 2};
  LengthPool points{1, 2};
  std::shared_ptr<const OracleMachine> gamma;
  std::uint64_t strong_depth = 128;
  std::uint64_t gamma_steps = 100000;
  /// Strong-node discovery depth grows as base + step/8 up to strong_depth,
  /// so late discoveries simply start their processes late.
  std::uint64_t discovery_base = 4;
  std::uint64_t epsilon_precision = 16;
  /// Finite split schedule for handing sub-pools to stations and their
  /// sequential calls. Keeps assigned lengths small; a run that needs more
  /// calls than the schedule provides stops with an error.
  std::uint64_t station_parts = 8;
  std::uint64_t call_parts = 64;
};

/// Winning strategy for the c-Gamma games: the base process forces weight
/// onto strong nodes and cashes in by inserting its reserved point; the
/// recursive process runs chains of child calls, each gated on the opponent
/// verifiably spending k' times the child budget above its root.
class IncompletenessStrategy : public Strategy {
 public:
  explicit IncompletenessStrategy(IncompletenessConfig cfg);
  ~IncompletenessStrategy() override;

  Move next(const GameState& state, const Trace& trace) override;

  /// Read-only view of the process tree, for audits and tests.
  struct ProcessInfo {
    std::string id;  // "P", "P/2.1", ... (station rank . call index)
    Dyadic k;
    Node root;
    Dyadic alpha;
    LengthPool lengths;
    LengthPool points;
    std::uint64_t point;
    Dyadic spent;
    std::string status;  // running | done | stopped
  };
  std::vector<ProcessInfo> processes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Round-robin mix of per-(c, Gamma) strategies over disjoint pools; total
/// weight is bounded by the sum of the component budgets.
class MixedIncompletenessStrategy : public Strategy {
 public:
  explicit MixedIncompletenessStrategy(std::vector<IncompletenessConfig> parts);

  Move next(const GameState& state, const Trace& trace) override;

  IncompletenessStrategy& part(std::size_t i) { return *subs_[i]; }
  std::size_t parts() const { return subs_.size(); }

 private:
  std::vector<std::unique_ptr<IncompletenessStrategy>> subs_;
  std::uint64_t turn_ = 0;
};

}  // namespace ktlab
