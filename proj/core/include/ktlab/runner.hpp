#pragma once

#include <memory>
#include <optional>

#include "ktlab/audit.hpp"
#include "ktlab/config.hpp"
#include "ktlab/engine.hpp"
#include "ktlab/strategy_lowness.hpp"

namespace ktlab {

struct RunArtifacts {
  Trace trace;
  AuditReport report;
  std::optional<GoldenReport> golden;
  /// 0: our side's verdicts hold; 1: the opponent survives the audit;
  /// 2: a rule violation ended the run.
  int exit_code = 0;
};

GameVariant variant_from_config(const RunConfig& cfg);
std::unique_ptr<Strategy> our_strategy_from_config(const RunConfig& cfg,
                                                   const GameVariant& variant);
std::unique_ptr<Strategy> opponent_from_config(const RunConfig& cfg, const GameVariant& variant);

/// Executes the configured run end to end: game, golden-run detection
/// (lowness) and audit. Throws ConfigError on invalid configuration.
RunArtifacts run_from_config(const RunConfig& cfg);

/// Recomputes the audit of an existing trace under the same configuration,
/// reproducing the run-time audit byte for byte.
AuditReport audit_trace_with_config(const RunConfig& cfg, const Trace& trace);

int exit_code_for(const AuditReport& report);

}  // namespace ktlab
