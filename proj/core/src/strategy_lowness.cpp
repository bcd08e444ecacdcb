#include "ktlab/strategy_lowness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ktlab/opponents.hpp"

namespace ktlab {

namespace {
const Dyadic kHalf = Dyadic(1).halve();
}

struct LownessStrategy::Impl {
  struct Proc;

  struct Station {
    Node y;
    std::uint64_t rank = 0;
    Dyadic eta;
    // base
    std::uint64_t l = 0;
    std::uint64_t object = 0;
    Dyadic target;  // alpha * epsilon * eta
    Dyadic delta;   // target * 2^-portion_shift
    Dyadic paid;
    bool completed = false;
    // recursive
    Dyadic child_budget;
    std::uint64_t call_index = 0;
    std::unique_ptr<Proc> child;
    std::vector<std::unique_ptr<Proc>> archive;
    bool awaiting_gate = false;
    Dyadic gate_acc;
    Dyadic gate_target;
  };

  struct Proc {
    std::string id;
    std::uint64_t level = 0;
    Dyadic c;
    bool base = false;
    Dyadic epsilon;
    Node root;
    Dyadic alpha;
    LengthPool lengths{1, 1};
    Dyadic spent;
    enum class St { running, halted, stopped } status = St::running;
    std::vector<std::unique_ptr<Station>> stations;
    std::set<Node> known;
    std::uint64_t next_l_floor = 0;
    std::uint64_t scan_stamp = ~std::uint64_t(0);
  };

  struct Plan {
    std::vector<std::pair<std::uint64_t, Dyadic>> length_incs;
    std::vector<std::pair<std::uint64_t, Dyadic>> object_incs;
  };

  LownessConfig cfg;
  std::unique_ptr<Proc> top;
  std::size_t consumed = 0;

  explicit Impl(LownessConfig c) : cfg(std::move(c)) {
    if (!cfg.labels) {
      throw std::invalid_argument("lowness strategy needs a labelled tree");
    }
    top = make_proc("S", 0, cfg.c, Node::root(), cfg.alpha, cfg.lengths);
  }

  std::unique_ptr<Proc> make_proc(std::string id, std::uint64_t level, Dyadic c, Node root,
                                  Dyadic alpha, LengthPool lengths) {
    auto p = std::make_unique<Proc>();
    p->id = std::move(id);
    p->level = level;
    p->c = std::move(c);
    p->base = p->c < Dyadic(2);
    if (p->base) {
      p->epsilon = epsilon_for(p->c, cfg.epsilon_precision);
    }
    p->root = std::move(root);
    p->alpha = std::move(alpha);
    p->lengths = lengths;
    return p;
  }

  void consume(const Trace& trace) {
    for (; consumed < trace.records.size(); ++consumed) {
      const TraceRecord& r = trace.records[consumed];
      if (r.player != Player::opponent) {
        continue;
      }
      if (const auto* a = std::get_if<IncNode>(&r.action)) {
        credit_gates(*top, a->node, a->delta);
      }
    }
  }

  void credit_gates(Proc& p, const Node& node, const Dyadic& delta) {
    if (p.status == Proc::St::stopped) {
      return;
    }
    for (auto& st : p.stations) {
      if (!st->child) {
        continue;
      }
      if (st->y.is_prefix_of(node) && st->child->lengths.contains(node.size())) {
        st->gate_acc += delta;
      }
      credit_gates(*st->child, node, delta);
    }
  }

  /// Labelled nodes of the path inside this process's subtree become
  /// stations; rescanned only when the path moved since the last scan.
  void discover(Proc& p, const GameState& state) {
    const std::uint64_t stamp = state.path().stable_since();
    if (stamp == p.scan_stamp) {
      return;
    }
    p.scan_stamp = stamp;
    const Node deep = state.path().prefix(cfg.label_depth);
    for (std::uint64_t d = p.root.size(); d <= cfg.label_depth; ++d) {
      const Node y = deep.prefix(d);
      if (p.known.count(y)) {
        continue;
      }
      const auto label = cfg.labels->label(y);
      if (!label || label->eta.is_zero()) {
        continue;
      }
      p.known.insert(y);
      auto st = std::make_unique<Station>();
      st->y = y;
      st->rank = p.stations.size() + 1;
      st->eta = label->eta;
      st->object = label->object;
      if (p.base) {
        st->l = p.lengths.first_above(std::max<std::uint64_t>(y.size(), p.next_l_floor));
        p.next_l_floor = st->l;
        st->target = p.alpha * p.epsilon * label->eta;
        st->delta = st->target.scale2(-static_cast<std::int64_t>(cfg.portion_shift));
      } else {
        st->child_budget = p.alpha * Dyadic::pow2_neg(st->rank + 3);
      }
      p.stations.push_back(std::move(st));
    }
  }

  void mark_stopped(Proc& p) {
    if (p.status == Proc::St::running) {
      p.status = Proc::St::stopped;
    }
    for (auto& st : p.stations) {
      if (st->child) {
        mark_stopped(*st->child);
      }
    }
  }

  /// The halting rule: a process that cannot afford the next portion stops
  /// its whole subtree, blocking the increase that would cross the budget.
  void halt(Proc& p) {
    for (auto& st : p.stations) {
      if (st->child) {
        mark_stopped(*st->child);
      }
    }
    p.status = Proc::St::halted;
  }

  bool request_increment(const Dyadic& delta, std::vector<Proc*>& chain) {
    for (Proc* p : chain) {
      if (p->alpha < p->spent + delta) {
        halt(*p);
        return false;
      }
    }
    for (Proc* p : chain) {
      p->spent += delta;
    }
    return true;
  }

  void start_call(Proc& p, Station& st) {
    if (st.rank > cfg.station_parts) {
      throw std::runtime_error("station schedule exhausted; raise station_parts");
    }
    if (st.call_index >= cfg.call_parts) {
      throw std::runtime_error("call schedule exhausted; raise call_parts");
    }
    ++st.call_index;
    const LengthPool station_lengths = p.lengths.split(cfg.station_parts)[st.rank - 1];
    st.gate_acc = Dyadic();
    st.child = make_proc(
        p.id + "/" + std::to_string(st.rank) + "." + std::to_string(st.call_index), p.level + 1,
        p.c - kHalf, st.y, st.child_budget,
        station_lengths.split(cfg.call_parts)[st.call_index - 1]);
  }

  void drive(Proc& p, const GameState& state, Plan& plan, std::vector<Proc*>& chain) {
    if (p.status != Proc::St::running || !state.path().passes_through(p.root)) {
      return;
    }
    chain.push_back(&p);
    discover(p, state);
    for (auto& st : p.stations) {
      if (p.status != Proc::St::running) {
        break;  // halted mid-move by a blocked increase
      }
      if (!state.path().passes_through(st->y)) {
        continue;
      }
      if (p.base) {
        drive_portion(p, *st, state, plan, chain);
      } else {
        drive_call(p, *st, state, plan, chain);
      }
    }
    chain.pop_back();
  }

  void drive_portion(Proc& p, Station& st, const GameState& state, Plan& plan,
                     std::vector<Proc*>& chain) {
    if (st.completed || st.target.is_zero()) {
      st.completed = true;
      return;
    }
    // Stations use distinct lengths, so reading the applied state suffices
    // even while this move accumulates increments for other stations.
    const Dyadic& ours = state.lengths().at(st.l);
    const Dyadic theirs = state.nodes().at(state.path().prefix(st.l));
    if (!ours.is_zero() && !(ours < theirs)) {
      return;  // previous portion not matched yet
    }
    const Dyadic portion = Dyadic::min(st.delta, st.target - st.paid);
    if (!request_increment(portion, chain)) {
      return;
    }
    plan.length_incs.emplace_back(st.l, portion);
    st.paid += portion;
    if (st.paid == st.target) {
      plan.object_incs.emplace_back(st.object, st.target);
      st.completed = true;
    }
  }

  void drive_call(Proc& p, Station& st, const GameState& state, Plan& plan,
                  std::vector<Proc*>& chain) {
    if (st.child && st.child->status == Proc::St::halted && !st.awaiting_gate) {
      st.awaiting_gate = true;
      st.gate_target = (p.c - kHalf) * st.child_budget;
    }
    if (st.awaiting_gate) {
      if (!(st.gate_target < st.gate_acc)) {
        return;
      }
      st.awaiting_gate = false;
      st.archive.push_back(std::move(st.child));
    }
    if (!st.child) {
      start_call(p, st);
    }
    drive(*st.child, state, plan, chain);
  }

  void collect(const Proc& p, std::vector<ProcessInfo>& out) const {
    const char* status = p.status == Proc::St::running  ? "running"
                         : p.status == Proc::St::halted ? "halted"
                                                        : "stopped";
    out.push_back(
        ProcessInfo{p.id, p.c, p.root, p.alpha, p.lengths, p.spent, p.level, status});
    for (const auto& st : p.stations) {
      for (const auto& old : st->archive) {
        collect(*old, out);
      }
      if (st->child) {
        collect(*st->child, out);
      }
    }
  }
};

LownessStrategy::LownessStrategy(LownessConfig cfg) : impl_(std::make_unique<Impl>(std::move(cfg))) {}

LownessStrategy::~LownessStrategy() = default;

Move LownessStrategy::next(const GameState& state, const Trace& trace) {
  impl_->consume(trace);
  Impl::Plan plan;
  std::vector<Impl::Proc*> chain;
  impl_->drive(*impl_->top, state, plan, chain);

  Move move{Player::us, {}};
  for (const auto& [length, delta] : plan.length_incs) {
    move.actions.push_back(IncLength{length, delta});
  }
  for (const auto& [object, delta] : plan.object_incs) {
    move.actions.push_back(IncObject{object, delta});
  }
  return move;
}

std::vector<LownessStrategy::ProcessInfo> LownessStrategy::processes() const {
  std::vector<ProcessInfo> out;
  impl_->collect(*impl_->top, out);
  return out;
}

std::optional<LownessStrategy::ProcessInfo> LownessStrategy::golden_candidate(
    const PathApprox& final_path) const {
  std::optional<ProcessInfo> best;
  for (const ProcessInfo& info : processes()) {
    if (info.status != "running" || !final_path.passes_through(info.root)) {
      continue;
    }
    if (!best || info.level > best->level ||
        (info.level == best->level && info.root.size() > best->root.size()) ||
        (info.level == best->level && info.root.size() == best->root.size() &&
         info.root.bits() < best->root.bits())) {
      best = info;
    }
  }
  return best;
}

std::optional<GoldenReport> golden_run_report(const LownessConfig& cfg, const Trace& trace,
                                              const LownessVariant& variant,
                                              AuditOptions options) {
  // Deterministic reconstruction: replay the opponent's recorded moves
  // against a fresh strategy instance, then inspect its process tree.
  LownessStrategy us(cfg);
  TracePlaybackStrategy opponent(trace, Player::opponent);
  RunResult rerun =
      run(GameVariant(variant), trace.our_budget, trace.opponent_budget, us, opponent,
          trace.horizon);
  const auto candidate = us.golden_candidate(rerun.state.path());
  if (!candidate) {
    return std::nullopt;
  }
  options.golden_root = candidate->root;
  const AuditReport report = audit(trace, GameVariant(variant), options);
  GoldenReport golden;
  golden.process_id = candidate->id;
  golden.root = candidate->root;
  golden.level = candidate->level;
  golden.constant = report.star_constant.value_or(Dyadic(0));
  golden.skipped_objects = report.star_skipped;
  return golden;
}

}  // namespace ktlab
