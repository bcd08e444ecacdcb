#include "ktlab/trace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ktlab {

namespace {

constexpr const char* kMagic = "ktlab-trace";
constexpr const char* kFormatVersion = "1";

std::string action_body(const Action& action) {
  std::ostringstream out;
  if (const auto* a = std::get_if<IncLength>(&action)) {
    out << "inc-length " << a->length << ' ' << a->delta.str();
  } else if (const auto* a = std::get_if<IncNode>(&action)) {
    out << "inc-node " << a->node.str() << ' ' << a->delta.str();
  } else if (const auto* a = std::get_if<IncObject>(&action)) {
    out << "inc-object " << a->object << ' ' << a->delta.str();
  } else if (const auto* a = std::get_if<FlipBit>(&action)) {
    out << "flip " << a->index << ' ' << (a->value ? 1 : 0);
  } else if (const auto* a = std::get_if<InsertW>(&action)) {
    out << "insert-w " << a->element;
  } else if (const auto* a = std::get_if<InsertWn>(&action)) {
    out << "insert-wn " << a->set_index << ' ' << a->element;
  } else if (const auto* a = std::get_if<Probe>(&action)) {
    out << "probe " << a->point;
  }
  return out.str();
}

Action parse_action(std::istringstream& fields, const std::string& kind,
                    const std::string& where) {
  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument(where + ": malformed " + kind + " record");
  };
  if (kind == "inc-length") {
    std::uint64_t length;
    std::string delta;
    need(static_cast<bool>(fields >> length >> delta));
    return IncLength{length, Dyadic::parse(delta)};
  }
  if (kind == "inc-node") {
    std::string node, delta;
    need(static_cast<bool>(fields >> node >> delta));
    return IncNode{Node::parse(node), Dyadic::parse(delta)};
  }
  if (kind == "inc-object") {
    std::uint64_t object;
    std::string delta;
    need(static_cast<bool>(fields >> object >> delta));
    return IncObject{object, Dyadic::parse(delta)};
  }
  if (kind == "flip") {
    std::uint64_t index;
    int value;
    need(static_cast<bool>(fields >> index >> value) && (value == 0 || value == 1));
    return FlipBit{index, value == 1};
  }
  if (kind == "insert-w") {
    std::uint64_t element;
    need(static_cast<bool>(fields >> element));
    return InsertW{element};
  }
  if (kind == "insert-wn") {
    std::uint64_t set_index, element;
    need(static_cast<bool>(fields >> set_index >> element));
    return InsertWn{set_index, element};
  }
  if (kind == "probe") {
    std::uint64_t point;
    need(static_cast<bool>(fields >> point));
    return Probe{point};
  }
  throw std::invalid_argument(where + ": unknown action kind " + kind);
}

}  // namespace

std::string action_to_line(std::uint64_t step, Player player, const Action& action) {
  std::ostringstream out;
  out << step << ' ' << to_string(player) << ' ' << action_body(action);
  return out.str();
}

void Trace::save(std::ostream& out) const {
  out << kMagic << ' ' << kFormatVersion << ' ' << variant << ' ' << our_budget.str() << ' '
      << opponent_budget.str() << ' ' << horizon << '\n';
  for (const TraceRecord& r : records) {
    out << action_to_line(r.step, r.player, r.action) << '\n';
  }
  if (violation) {
    out << "violation " << to_string(violation->kind) << ' ' << to_string(violation->player)
        << ' ' << violation->step << ' ' << violation->detail << '\n';
  }
}

void Trace::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write trace file: " + path);
  }
  save(out);
}

Trace Trace::load(std::istream& in, const std::string& origin) {
  Trace trace;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(origin + ": empty trace file");
  }
  {
    std::istringstream header(line);
    std::string magic, version, our_b, opp_b;
    if (!(header >> magic >> version >> trace.variant >> our_b >> opp_b >> trace.horizon) ||
        magic != kMagic || version != kFormatVersion) {
      throw std::invalid_argument(origin + ": bad trace header");
    }
    trace.our_budget = Dyadic::parse(our_b);
    trace.opponent_budget = Dyadic::parse(opp_b);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    const std::string where = origin + ":" + std::to_string(lineno);
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    if (first == "violation") {
      std::string kind, player, detail;
      std::uint64_t step;
      if (!(fields >> kind >> player >> step >> detail)) {
        throw std::invalid_argument(where + ": malformed violation record");
      }
      trace.violation = Violation{violation_kind_from_string(kind), player_from_string(player),
                                  step, detail};
      continue;
    }
    TraceRecord record;
    record.step = std::stoull(first);
    std::string player, kind;
    if (!(fields >> player >> kind)) {
      throw std::invalid_argument(where + ": malformed record");
    }
    record.player = player_from_string(player);
    record.action = parse_action(fields, kind, where);
    trace.records.push_back(std::move(record));
  }
  return trace;
}

Trace Trace::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open trace file: " + path);
  }
  return load(in, path);
}

ReplayOutcome replay(const Trace& trace, const GameVariant& variant) {
  if (trace.variant != variant_name(variant)) {
    throw std::invalid_argument("trace variant '" + trace.variant + "' does not match '" +
                                variant_name(variant) + "'");
  }
  ReplayOutcome outcome{GameState(variant, trace.our_budget, trace.opponent_budget), std::nullopt,
                        true};
  GameState& state = outcome.state;

  auto check_invariants = [&]() {
    if (state.lengths().total() < state.objects().total()) {
      outcome.object_le_length = false;
    }
  };

  auto pass_until = [&](std::uint64_t target_step) -> bool {
    while (state.step() < target_step) {
      Move pass{state.whose_turn(), {}};
      if (auto v = state.apply(pass)) {
        outcome.violation = v;  // cannot happen: passes are always legal
        return false;
      }
    }
    return true;
  };

  std::size_t i = 0;
  while (i < trace.records.size()) {
    const std::uint64_t step = trace.records[i].step;
    const Player player = trace.records[i].player;
    if (step == 0 || !pass_until(step - 1)) {
      outcome.violation = outcome.violation.value_or(
          Violation{ViolationKind::turn_order, player, step, "bad-step"});
      return outcome;
    }
    Move move{player, {}};
    while (i < trace.records.size() && trace.records[i].step == step &&
           trace.records[i].player == player) {
      move.actions.push_back(trace.records[i].action);
      ++i;
    }
    if (auto v = state.apply(move)) {
      outcome.violation = v;
      return outcome;
    }
    check_invariants();
  }
  // A recorded violation ends the run; otherwise pad passes to the horizon.
  if (trace.violation) {
    outcome.violation = trace.violation;
    return outcome;
  }
  pass_until(trace.horizon);
  return outcome;
}

}  // namespace ktlab
