#include "ktlab/audit.hpp"

#include <algorithm>
#include <sstream>

namespace ktlab {

const char* to_string(ReductionVerdict v) {
  switch (v) {
    case ReductionVerdict::holds: return "holds";
    case ReductionVerdict::fails: return "fails";
    case ReductionVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct MatchingResult {
  bool holds = true;
  std::optional<std::uint64_t> first_violation;
  std::optional<Dyadic> witnessed;
};

/// demand(l) must be covered by the weight sitting on the stable path's
/// l-prefix; `strict` asks for strictly-greater (the footnote rule of the
/// reduction games), non-strict for the existence game.
template <typename SupplyFn>
MatchingResult check_matching(const std::map<std::uint64_t, Dyadic>& demands, SupplyFn supply,
                              bool strict, std::uint64_t precision) {
  MatchingResult r;
  bool witnessed_ok = true;
  Dyadic worst;  // max demand/supply, as a ceil-rounded dyadic
  for (const auto& [length, demand] : demands) {
    if (demand.is_zero()) {
      continue;
    }
    const Dyadic got = supply(length);
    const bool ok = strict ? demand < got : !(got < demand);
    if (!ok && r.holds) {
      r.holds = false;
      r.first_violation = length;
    }
    if (got.is_zero()) {
      witnessed_ok = false;
    } else if (witnessed_ok) {
      worst = Dyadic::max(worst, ceil_ratio(demand, got, precision));
    }
  }
  if (witnessed_ok) {
    r.witnessed = worst;
  }
  return r;
}

}  // namespace

AuditReport audit(const Trace& trace, const GameVariant& variant, const AuditOptions& options) {
  AuditReport report;
  report.variant = trace.variant;
  report.horizon = trace.horizon;

  ReplayOutcome outcome = replay(trace, variant);
  const GameState& state = outcome.state;

  report.violation = outcome.violation;
  report.budgets_respected =
      !(outcome.violation && outcome.violation->kind == ViolationKind::budget);
  report.path_stable_since = state.path().stable_since();
  report.object_le_length = outcome.object_le_length;

  const bool existence = std::holds_alternative<ExistenceVariant>(variant);
  report.our_spend_total = existence ? state.nodes().total() : state.lengths().total();
  report.opponent_spend_total = existence ? state.lengths().total() : state.nodes().total();

  // Matching along the stable path, at the lengths where the demanding
  // ledger is positive.
  if (existence) {
    report.matching_horizon_relative = true;
    report.matching_holds = true;
    auto r = check_matching(
        state.lengths().entries(),
        [&](std::uint64_t l) { return state.nodes().at(state.path().prefix(l)); },
        /*strict=*/false, options.constant_precision);
    report.matching_holds = r.holds;
    report.matching_first_violation = r.first_violation;
    report.matching_witnessed_constant = r.witnessed;
  } else {
    const std::optional<Dyadic>* declared = nullptr;
    if (const auto* inc = std::get_if<IncompletenessVariant>(&variant)) {
      declared = &inc->c;
    } else if (const auto* low = std::get_if<LownessVariant>(&variant)) {
      declared = &low->c;
    }
    report.matching_horizon_relative = !(declared && declared->has_value());
    auto r = check_matching(
        state.lengths().entries(),
        [&](std::uint64_t l) { return state.nodes().at(state.path().prefix(l)); },
        /*strict=*/true, options.constant_precision);
    report.matching_holds = r.holds;
    report.matching_first_violation = r.first_violation;
    report.matching_witnessed_constant = r.witnessed;
  }

  // Reduction verdicts at every probed point, decided by the step-bounded
  // machine on the stable path.
  if (const auto* inc = std::get_if<IncompletenessVariant>(&variant)) {
    for (std::uint64_t m : state.probes()) {
      ReductionVerdict verdict = ReductionVerdict::inconclusive;
      if (inc->gamma) {
        const auto out = inc->gamma->evaluate_on_path(m, state.path(), options.gamma_steps);
        if (out.has_value()) {
          const bool in_w = state.w().count(m) > 0;
          verdict = (*out == in_w) ? ReductionVerdict::holds : ReductionVerdict::fails;
        }
      }
      report.reductions[m] = verdict;
    }
  }

  // *-exceeding on objects (lowness): compare our object weights with the
  // label requests along the stable path.
  if (const auto* low = std::get_if<LownessVariant>(&variant)) {
    std::map<std::uint64_t, Dyadic> requests;
    std::set<std::uint64_t> skipped;
    if (low->labels) {
      for (std::uint64_t d = 0; d <= options.label_depth; ++d) {
        const Node u = state.path().prefix(d);
        const auto label = low->labels->label(u);
        if (!label || label->eta.is_zero()) {
          continue;
        }
        requests[label->object] += label->eta;
        if (options.golden_root && u != *options.golden_root &&
            u.is_prefix_of(*options.golden_root)) {
          skipped.insert(label->object);
        }
      }
    }
    report.star_skipped.assign(skipped.begin(), skipped.end());
    bool exceeds = true;
    std::optional<Dyadic> constant;
    for (const auto& [object, request] : requests) {
      if (skipped.count(object)) {
        continue;
      }
      const Dyadic& got = state.objects().at(object);
      if (got.is_zero()) {
        exceeds = false;
        constant = Dyadic(0);
        break;
      }
      const Dyadic ratio = floor_ratio(got, request, options.constant_precision);
      constant = constant ? Dyadic::min(*constant, ratio) : ratio;
    }
    if (constant && constant->is_zero()) {
      exceeds = false;
    }
    report.star_exceeds = exceeds;
    report.star_constant = constant;
  }

  return report;
}

std::string AuditReport::serialize() const {
  std::ostringstream out;
  auto opt_u64 = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  auto opt_dyadic = [](const std::optional<Dyadic>& v) { return v ? v->str() : std::string("-"); };
  auto boolean = [](bool b) { return b ? "true" : "false"; };

  out << "ktlab-audit 1\n";
  out << "variant=" << variant << '\n';
  out << "horizon=" << horizon << '\n';
  out << "budgets_respected=" << boolean(budgets_respected) << '\n';
  out << "matching_first_violation=" << opt_u64(matching_first_violation) << '\n';
  out << "matching_holds=" << boolean(matching_holds) << '\n';
  out << "matching_horizon_relative=" << boolean(matching_horizon_relative) << '\n';
  out << "matching_witnessed_constant=" << opt_dyadic(matching_witnessed_constant) << '\n';
  out << "object_le_length=" << boolean(object_le_length) << '\n';
  out << "opponent_spend_total=" << opponent_spend_total.str() << '\n';
  out << "our_spend_total=" << our_spend_total.str() << '\n';
  out << "path_stable_since=" << path_stable_since << '\n';
  for (const auto& [m, verdict] : reductions) {
    out << "reduction[" << m << "]=" << to_string(verdict) << '\n';
  }
  if (star_exceeds.has_value()) {
    out << "star_constant=" << opt_dyadic(star_constant) << '\n';
    out << "star_exceeds=" << boolean(*star_exceeds) << '\n';
    out << "star_skipped=";
    if (star_skipped.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < star_skipped.size(); ++i) {
        out << (i ? "," : "") << star_skipped[i];
      }
    }
    out << '\n';
  }
  out << "violation=";
  if (violation) {
    out << to_string(violation->kind) << ':' << to_string(violation->player) << ':'
        << violation->step << ':' << violation->detail;
  } else {
    out << '-';
  }
  out << '\n';
  return out.str();
}

bool AuditReport::opponent_survives() const {
  if (variant == "existence") {
    // Roles are flipped: the length player survives when we fail to match
    // or we broke a rule.
    if (violation && violation->player == Player::us) {
      return true;
    }
    return !matching_holds;
  }
  if (violation && violation->player == Player::opponent) {
    return false;
  }
  if (!matching_holds) {
    return false;
  }
  for (const auto& [m, verdict] : reductions) {
    if (verdict != ReductionVerdict::holds) {
      return false;
    }
  }
  if (star_exceeds.value_or(false)) {
    return false;
  }
  return true;
}

}  // namespace ktlab
