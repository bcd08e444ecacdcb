#include "ktlab/runner.hpp"

#include "ktlab/opponents.hpp"
#include "ktlab/strategy_incompleteness.hpp"
#include "ktlab/strategy_solovay.hpp"

namespace ktlab {

namespace {

std::shared_ptr<const LabelledTree> labels_from_config(const RunConfig& cfg) {
  if (!cfg.labels.empty()) {
    return ExplicitLabelledTree::load(cfg.labels);
  }
  if (!cfg.sem_machine.empty()) {
    return machine_to_labels(SemimeasureMachine::load(cfg.sem_machine), cfg.label_depth,
                             cfg.sim_steps);
  }
  throw ConfigError("lowness game needs labels= or sem_machine=");
}

IncompletenessConfig incompleteness_config(const RunConfig& cfg,
                                           const IncompletenessVariant& variant) {
  if (!variant.c) {
    throw ConfigError("the incompleteness strategy needs a declared c=");
  }
  IncompletenessConfig out;
  out.k = *variant.c;
  out.alpha = cfg.our_budget;
  out.lengths = LengthPool(cfg.lengths_offset, cfg.lengths_stride);
  out.points = LengthPool(cfg.points_offset, cfg.points_stride);
  out.gamma = variant.gamma;
  out.strong_depth = cfg.strong_depth;
  out.gamma_steps = cfg.gamma_steps;
  return out;
}

LownessConfig lowness_config(const RunConfig& cfg, const LownessVariant& variant) {
  if (!variant.c) {
    throw ConfigError("the lowness strategy needs a declared c=");
  }
  LownessConfig out;
  out.c = *variant.c;
  out.alpha = cfg.our_budget;
  out.lengths = LengthPool(cfg.lengths_offset, cfg.lengths_stride);
  out.labels = variant.labels;
  out.label_depth = cfg.label_depth;
  out.portion_shift = cfg.portion_shift;
  return out;
}

}  // namespace

GameVariant variant_from_config(const RunConfig& cfg) {
  if (cfg.variant == "existence") {
    return ExistenceVariant{};
  }
  if (cfg.variant == "incompleteness") {
    IncompletenessVariant v;
    v.c = cfg.c;
    if (cfg.machine.empty()) {
      throw ConfigError("incompleteness game needs machine=");
    }
    v.gamma = std::make_shared<const OracleMachine>(OracleMachine::load(cfg.machine));
    return v;
  }
  if (cfg.variant == "lowness") {
    LownessVariant v;
    v.c = cfg.c;
    v.labels = labels_from_config(cfg);
    return v;
  }
  throw ConfigError("unknown variant: " + cfg.variant);
}

std::unique_ptr<Strategy> our_strategy_from_config(const RunConfig& cfg,
                                                   const GameVariant& variant) {
  if (cfg.us == "noop") {
    return std::make_unique<NoOpStrategy>();
  }
  if (cfg.us == "solovay") {
    if (!std::holds_alternative<ExistenceVariant>(variant)) {
      throw ConfigError("solovay plays the existence game");
    }
    return std::make_unique<SolovayStrategy>();
  }
  if (cfg.us == "incompleteness") {
    const auto* v = std::get_if<IncompletenessVariant>(&variant);
    if (v == nullptr) {
      throw ConfigError("incompleteness strategy needs variant=incompleteness");
    }
    return std::make_unique<IncompletenessStrategy>(incompleteness_config(cfg, *v));
  }
  if (cfg.us == "lowness") {
    const auto* v = std::get_if<LownessVariant>(&variant);
    if (v == nullptr) {
      throw ConfigError("lowness strategy needs variant=lowness");
    }
    return std::make_unique<LownessStrategy>(lowness_config(cfg, *v));
  }
  throw ConfigError("unknown us strategy: " + cfg.us);
}

std::unique_ptr<Strategy> opponent_from_config(const RunConfig& cfg, const GameVariant& variant) {
  if (cfg.opponent == "noop") {
    return std::make_unique<NoOpStrategy>();
  }
  if (cfg.opponent == "blind") {
    BlindExistenceOpponent::Config c;
    c.seed = cfg.seed;
    return std::make_unique<BlindExistenceOpponent>(c);
  }
  if (cfg.opponent == "refuse") {
    return std::make_unique<RefusingOpponent>(Node::parse(cfg.engage.empty() ? "-" : cfg.engage));
  }
  if (cfg.opponent == "match") {
    const auto* v = std::get_if<IncompletenessVariant>(&variant);
    if (v == nullptr) {
      throw ConfigError("the match opponent plays the incompleteness game");
    }
    MatchingEscaperOpponent::Config c;
    c.gamma = v->gamma;
    return std::make_unique<MatchingEscaperOpponent>(c);
  }
  if (cfg.opponent == "lowmatch") {
    LownessMatchingOpponent::Config c;
    c.target_path = Node::parse(cfg.engage.empty() ? "-" : cfg.engage);
    return std::make_unique<LownessMatchingOpponent>(c);
  }
  if (cfg.opponent == "churn") {
    return std::make_unique<ChurnOpponent>(ChurnOpponent::Config{});
  }
  throw ConfigError("unknown opponent: " + cfg.opponent);
}

int exit_code_for(const AuditReport& report) {
  if (report.violation) {
    return 2;
  }
  return report.opponent_survives() ? 1 : 0;
}

namespace {

AuditOptions audit_options_for(const RunConfig& cfg, const GameVariant& variant,
                               const Trace& trace, std::optional<GoldenReport>* golden_out) {
  AuditOptions options;
  options.gamma_steps = cfg.gamma_steps;
  options.label_depth = cfg.label_depth;
  if (cfg.us == "lowness") {
    if (const auto* v = std::get_if<LownessVariant>(&variant)) {
      auto golden = golden_run_report(lowness_config(cfg, *v), trace, *v, options);
      if (golden) {
        options.golden_root = golden->root;
      }
      if (golden_out != nullptr) {
        *golden_out = std::move(golden);
      }
    }
  }
  return options;
}

}  // namespace

RunArtifacts run_from_config(const RunConfig& cfg) {
  const GameVariant variant = variant_from_config(cfg);
  auto us = our_strategy_from_config(cfg, variant);
  auto opponent = opponent_from_config(cfg, variant);
  RunArtifacts artifacts{};
  RunResult result =
      run(variant, cfg.our_budget, cfg.opponent_budget, *us, *opponent, cfg.horizon);
  artifacts.trace = std::move(result.trace);
  const AuditOptions options =
      audit_options_for(cfg, variant, artifacts.trace, &artifacts.golden);
  artifacts.report = audit(artifacts.trace, variant, options);
  artifacts.exit_code = exit_code_for(artifacts.report);
  return artifacts;
}

AuditReport audit_trace_with_config(const RunConfig& cfg, const Trace& trace) {
  const GameVariant variant = variant_from_config(cfg);
  const AuditOptions options = audit_options_for(cfg, variant, trace, nullptr);
  return audit(trace, variant, options);
}

}  // namespace ktlab
