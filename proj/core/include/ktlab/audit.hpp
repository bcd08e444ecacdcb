#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktlab/game.hpp"
#include "ktlab/trace.hpp"

namespace ktlab {

enum class ReductionVerdict : std::uint8_t { holds, fails, inconclusive };

const char* to_string(ReductionVerdict v);

struct AuditOptions {
  /// Step bound for deciding Gamma on the stable path; non-convergence
  /// within the bound is reported as inconclusive, never guessed.
  std::uint64_t gamma_steps = 100000;
  /// How deep along the stable path labels are collected (lowness).
  std::uint64_t label_depth = 256;
  /// Grid (2^-bits) on which witnessed constants are reported.
  std::uint64_t constant_precision = 64;
  /// Root of the golden run, when one was identified: objects requested
  /// strictly below it are excluded from the *-exceeds check and listed.
  std::optional<Node> golden_root;
};

/// Horizon-relative verdicts, all recomputable from the trace alone.
struct AuditReport {
  std::string variant;
  std::uint64_t horizon = 0;
  bool budgets_respected = true;
  std::optional<Violation> violation;
  std::uint64_t path_stable_since = 0;

  /// Factor-1 matching along the stable path: in the existence game our
  /// node weights must reach the opponent's length weights (>=); in the
  /// other games the opponent must strictly exceed ours (>).
  bool matching_holds = true;
  std::optional<std::uint64_t> matching_first_violation;
  /// Best factor witnessed at the horizon (smallest c with supply >=
  /// demand/c), absent when some demanded prefix carries no weight at all.
  std::optional<Dyadic> matching_witnessed_constant;
  bool matching_horizon_relative = false;

  /// Per probed point m: does W(m) <-> Gamma^a(m)=1 hold on the stable path?
  std::map<std::uint64_t, ReductionVerdict> reductions;

  std::optional<bool> star_exceeds;
  std::optional<Dyadic> star_constant;
  std::vector<std::uint64_t> star_skipped;

  bool object_le_length = true;
  Dyadic our_spend_total;
  Dyadic opponent_spend_total;

  /// Canonical flat key=value document; byte-stable for identical inputs.
  std::string serialize() const;

  /// Whether the opponent's win conditions all verifiably hold at the
  /// horizon (exit-code logic lives on top of this).
  bool opponent_survives() const;
};

AuditReport audit(const Trace& trace, const GameVariant& variant,
                  const AuditOptions& options = {});

}  // namespace ktlab
