#include "ktlab/strategy_incompleteness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ktlab {

Dyadic epsilon_for(const Dyadic& c, std::uint64_t precision) {
  const Dyadic gap = Dyadic(2) - c;  // underflows when c > 2
  const Dyadic eps = floor_div(gap, 6, precision);
  if (eps.is_zero()) {
    throw std::invalid_argument("c is too close to 2 for the epsilon grid: " + c.str());
  }
  return eps;
}

namespace {
const Dyadic kHalf = Dyadic(1).halve();
}

struct IncompletenessStrategy::Impl {
  struct Proc;

  /// Driver for one discovered strong node: either a portion pump (base) or
  /// a chain of recursive calls with a verification gate between them.
  struct Station {
    Node y;
    std::uint64_t rank = 0;
    Dyadic delta;  // portion size (base) / per-call child budget (recursive)
    // base
    std::uint64_t l = 0;
    // recursive
    std::uint64_t call_index = 0;
    std::unique_ptr<Proc> child;
    std::vector<std::unique_ptr<Proc>> archive;  // finished calls
    bool awaiting_gate = false;
    Dyadic gate_acc;     // opponent spend above y at current-call pool lengths
    Dyadic gate_target;  // k' * delta
  };

  struct Proc {
    std::string id;
    Dyadic k;
    bool base = false;
    Dyadic epsilon;  // base only
    Node root;
    Dyadic alpha;
    LengthPool lengths{1, 1};
    LengthPool points{1, 1};
    std::uint64_t point = 0;  // reserved m, first member of the points pool
    bool probed = false;
    Dyadic spent;
    enum class St { running, done_self, done_external } status = St::running;
    std::vector<std::unique_ptr<Station>> stations;
    std::set<Node> known;
    std::uint64_t next_l_floor = 0;
    std::uint64_t scanned_depth = ~std::uint64_t(0);
  };

  struct Plan {
    std::vector<std::uint64_t> probes;
    std::optional<std::pair<std::uint64_t, Dyadic>> increment;
    std::optional<std::uint64_t> insertion;
  };

  IncompletenessConfig cfg;
  std::unique_ptr<Proc> top;
  std::size_t consumed = 0;

  explicit Impl(IncompletenessConfig c) : cfg(std::move(c)) {
    if (!cfg.gamma) {
      throw std::invalid_argument("incompleteness strategy needs an oracle machine");
    }
    if (cfg.lengths.intersects(cfg.points)) {
      throw std::invalid_argument("length and point pools overlap");
    }
    top = make_proc("P", cfg.k, Node::root(), cfg.alpha, cfg.lengths, cfg.points);
  }

  std::unique_ptr<Proc> make_proc(std::string id, Dyadic k, Node root, Dyadic alpha,
                                  LengthPool lengths, LengthPool points) {
    auto p = std::make_unique<Proc>();
    p->id = std::move(id);
    p->k = std::move(k);
    p->base = p->k < Dyadic(2);
    if (p->base) {
      p->epsilon = epsilon_for(p->k, cfg.epsilon_precision);
    }
    p->root = std::move(root);
    p->alpha = std::move(alpha);
    p->lengths = lengths;
    p->points = points;
    p->point = points.offset();  // smallest element outside every sub-pool
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
    if (p.status == Proc::St::done_external) {
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

  void discover(Proc& p, const GameState& state) {
    std::uint64_t depth = cfg.discovery_base + state.step() / 8;
    depth = std::min(depth, cfg.strong_depth);
    if (depth == p.scanned_depth) {
      return;
    }
    p.scanned_depth = depth;
    for (const Node& y : cfg.gamma->minimal_strong(p.point, depth, cfg.gamma_steps)) {
      if (!p.root.is_prefix_of(y) || !p.known.insert(y).second) {
        continue;
      }
      auto st = std::make_unique<Station>();
      st->y = y;
      st->rank = p.stations.size() + 1;
      if (p.base) {
        st->l = p.lengths.first_above(std::max<std::uint64_t>(y.size(), p.next_l_floor));
        p.next_l_floor = st->l;
        st->delta = p.alpha * p.epsilon * Dyadic::pow2_neg(st->rank + 2);
      } else {
        st->delta = p.alpha * Dyadic::pow2_neg(st->rank + 3);
      }
      p.stations.push_back(std::move(st));
    }
  }

  void mark_external(Proc& p) {
    if (p.status == Proc::St::running) {
      p.status = Proc::St::done_external;
    }
    for (auto& st : p.stations) {
      if (st->child) {
        mark_external(*st->child);
      }
    }
  }

  /// Sends the termination signal: children settle first (externally, no
  /// insertion of their own), then the process adds its reserved point.
  void terminate(Proc& p, Plan& plan) {
    for (auto& st : p.stations) {
      if (st->child) {
        mark_external(*st->child);
      }
    }
    p.status = Proc::St::done_self;
    plan.insertion = p.point;
  }

  bool request_increment(std::uint64_t length, const Dyadic& delta, std::vector<Proc*>& chain,
                         Plan& plan) {
    for (Proc* p : chain) {
      if (p->alpha < p->spent + delta) {
        terminate(*p, plan);
        return true;
      }
    }
    plan.increment = {length, delta};
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
    // Part 0 of the point split stays with this process: it holds the
    // reserved point, which must lie outside every child pool.
    const LengthPool station_lengths = p.lengths.split(cfg.station_parts)[st.rank - 1];
    const LengthPool station_points = p.points.split(cfg.station_parts + 1)[st.rank];
    st.gate_acc = Dyadic();
    st.child = make_proc(p.id + "/" + std::to_string(st.rank) + "." +
                             std::to_string(st.call_index),
                         p.k - kHalf, st.y, st.delta,
                         station_lengths.split(cfg.call_parts)[st.call_index - 1],
                         station_points.split(cfg.call_parts)[st.call_index - 1]);
  }

  bool drive(Proc& p, const GameState& state, Plan& plan, std::vector<Proc*>& chain) {
    if (p.status != Proc::St::running || !state.path().passes_through(p.root)) {
      return false;
    }
    chain.push_back(&p);
    if (!p.probed) {
      plan.probes.push_back(p.point);
      p.probed = true;
    }
    discover(p, state);
    Station* active = nullptr;
    for (auto& st : p.stations) {
      if (state.path().passes_through(st->y)) {
        active = st.get();
        break;  // minimal strong roots are incomparable: at most one on path
      }
    }
    bool acted = false;
    if (active != nullptr) {
      if (p.base) {
        const Dyadic& ours = state.lengths().at(active->l);
        const Dyadic theirs = state.nodes().at(state.path().prefix(active->l));
        if (ours.is_zero() || ours < theirs) {
          acted = request_increment(active->l, active->delta, chain, plan);
        }
      } else {
        acted = drive_station(p, *active, state, plan, chain);
      }
    }
    chain.pop_back();
    return acted;
  }

  bool drive_station(Proc& p, Station& st, const GameState& state, Plan& plan,
                     std::vector<Proc*>& chain) {
    if (st.child && st.child->status == Proc::St::done_self && !st.awaiting_gate) {
      st.awaiting_gate = true;
      st.gate_target = (p.k - kHalf) * st.delta;
    }
    if (st.awaiting_gate) {
      if (!(st.gate_target < st.gate_acc)) {
        return false;  // wait until the opponent verifiably paid k' * delta
      }
      st.awaiting_gate = false;
      st.archive.push_back(std::move(st.child));
    }
    if (!st.child) {
      start_call(p, st);
    }
    return drive(*st.child, state, plan, chain);
  }

  void collect(const Proc& p, std::vector<ProcessInfo>& out) const {
    const char* status = p.status == Proc::St::running      ? "running"
                         : p.status == Proc::St::done_self  ? "done"
                                                            : "stopped";
    out.push_back(ProcessInfo{p.id, p.k, p.root, p.alpha, p.lengths, p.points, p.point, p.spent,
                              status});
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

IncompletenessStrategy::IncompletenessStrategy(IncompletenessConfig cfg)
    : impl_(std::make_unique<Impl>(std::move(cfg))) {}

IncompletenessStrategy::~IncompletenessStrategy() = default;

Move IncompletenessStrategy::next(const GameState& state, const Trace& trace) {
  impl_->consume(trace);
  Impl::Plan plan;
  std::vector<Impl::Proc*> chain;
  impl_->drive(*impl_->top, state, plan, chain);

  Move move{Player::us, {}};
  for (std::uint64_t m : plan.probes) {
    move.actions.push_back(Probe{m});
  }
  if (plan.insertion) {
    move.actions.push_back(InsertW{*plan.insertion});
  } else if (plan.increment) {
    move.actions.push_back(IncLength{plan.increment->first, plan.increment->second});
  }
  return move;
}

std::vector<IncompletenessStrategy::ProcessInfo> IncompletenessStrategy::processes() const {
  std::vector<ProcessInfo> out;
  impl_->collect(*impl_->top, out);
  return out;
}

MixedIncompletenessStrategy::MixedIncompletenessStrategy(std::vector<IncompletenessConfig> parts) {
  if (parts.empty()) {
    throw std::invalid_argument("mix needs at least one component");
  }
  Dyadic total;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += parts[i].alpha;
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (parts[i].lengths.intersects(parts[j].lengths) ||
          parts[i].points.intersects(parts[j].points)) {
        throw std::invalid_argument("mix components must use disjoint pools");
      }
    }
  }
  if (Dyadic(1) < total) {
    throw std::invalid_argument("mix budgets sum past 1");
  }
  for (auto& part : parts) {
    subs_.push_back(std::make_unique<IncompletenessStrategy>(std::move(part)));
  }
}

Move MixedIncompletenessStrategy::next(const GameState& state, const Trace& trace) {
  // Round-robin: one component acts per turn; the others catch up on the
  // trace the next time they are scheduled.
  IncompletenessStrategy& sub = *subs_[turn_ % subs_.size()];
  ++turn_;
  return sub.next(state, trace);
}

}  // namespace ktlab
