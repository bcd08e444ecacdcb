#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ktlab/engine.hpp"

namespace ktlab {

/// The computable winning strategy for the existence game: replicate the
/// opponent's length weights along the characteristic path of A, and grow A
/// into a simple set by admitting one cheap element u > 2n from each W_n.
class SolovayStrategy : public Strategy {
 public:
  struct ScriptedEvent {
    std::uint64_t step;  // earliest step at which the event is visible
    std::uint64_t set_index;
    std::uint64_t element;
  };

  SolovayStrategy() = default;
  /// Extra enumeration events merged with whatever the opponent plays,
  /// for driving the strategy from a pre-scripted W_n list.
  explicit SolovayStrategy(std::vector<ScriptedEvent> scripted);

  Move next(const GameState& state, const Trace& trace) override;

  /// Total weight we placed on current-path prefixes of length >= u: the
  /// amount that would be lost (and replicated) if the path changed at u.
  Dyadic cost(std::uint64_t u) const;

  /// The admission rule: n still unhandled, u > 2n, cost(u) < 2^-n.
  bool consider(std::uint64_t n, std::uint64_t u) const;

  const std::set<std::uint64_t>& a() const { return a_; }
  const std::set<std::uint64_t>& handled() const { return handled_; }

 private:
  bool path_bit(std::uint64_t i) const { return a_.count(i) > 0; }
  Node path_prefix(std::uint64_t n) const;
  void replicate(std::uint64_t length, const Dyadic& delta, std::vector<Action>& actions);

  std::vector<ScriptedEvent> scripted_;
  std::size_t scripted_done_ = 0;
  std::size_t consumed_ = 0;

  std::set<std::uint64_t> a_;
  std::set<std::uint64_t> handled_;
  std::map<std::uint64_t, Dyadic> mu_;               // opponent length weights
  std::map<Node, Dyadic> placed_;                    // our node weights
};

}  // namespace ktlab
