#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ktlab/audit.hpp"
#include "ktlab/engine.hpp"
#include "ktlab/labelled_tree.hpp"
#include "ktlab/length_pool.hpp"
#include "ktlab/strategy_incompleteness.hpp"  // epsilon_for

namespace ktlab {

struct LownessConfig {
  /// Declared constant of the scaled game; base behaviour below 2,
  /// recursive calls at c - 1/2 otherwise.
  Dyadic c;
  /// Budget of the top process (the whole strategy's length budget).
  Dyadic alpha;
  LengthPool lengths{2, 2};
  std::shared_ptr<const LabelledTree> labels;
  std::uint64_t label_depth = 96;
  /// Base portions: a label target is paid in 2^portion_shift equal slices.
  std::uint64_t portion_shift = 7;
  std::uint64_t epsilon_precision = 16;
  /// Finite split schedule for station and call sub-pools (see the
  /// incompleteness strategy).
  std::uint64_t station_parts = 8;
  std::uint64_t call_parts = 64;
};

/// The lowness machinery: per labelled node on the path, the base process
/// pumps matched portions at its assigned length until the scaled label
/// target is reached, then pays the object; the recursive process runs
/// gated chains of smaller-c calls. The whole strategy stops just before
/// its length spending would cross the budget.
class LownessStrategy : public Strategy {
 public:
  explicit LownessStrategy(LownessConfig cfg);
  ~LownessStrategy() override;

  Move next(const GameState& state, const Trace& trace) override;

  struct ProcessInfo {
    std::string id;  // "S", "S/1.2", ...
    Dyadic c;
    Node root;
    Dyadic alpha;
    LengthPool lengths;
    Dyadic spent;
    std::uint64_t level;
    std::string status;  // running | halted | stopped
  };
  std::vector<ProcessInfo> processes() const;

  /// The deepest still-running process whose root lies on the given path:
  /// the golden-run candidate. Absent when the top-level strategy stopped.
  std::optional<ProcessInfo> golden_candidate(const PathApprox& final_path) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct GoldenReport {
  std::string process_id;
  Node root;
  std::uint64_t level;
  /// Our object weights are at least this multiple of the stable path's
  /// label weights (objects requested strictly below the root excluded).
  Dyadic constant;
  std::vector<std::uint64_t> skipped_objects;
};

/// Replays the trace (deterministically reconstructing the strategy's
/// process tree), identifies the golden run and computes its witnessed
/// constant against the stable path's labels.
std::optional<GoldenReport> golden_run_report(const LownessConfig& cfg, const Trace& trace,
                                              const LownessVariant& variant,
                                              AuditOptions options = {});

}  // namespace ktlab
