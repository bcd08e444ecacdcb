#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ktlab/dyadic.hpp"

namespace ktlab {

/// Monotone key -> weight map with an exact running total and a hard budget.
/// Entries only ever increase; the total equals the sum of entries exactly;
/// every increase is logged with the step that made it. An increase that
/// would push the total past the budget is refused and leaves the ledger
/// untouched — the game engine turns that refusal into a rule violation.
template <typename Key>
class WeightLedger {
 public:
  struct LogEntry {
    std::uint64_t step;
    Key key;
    Dyadic delta;
  };

  WeightLedger() : budget_(Dyadic(0)) {}
  explicit WeightLedger(Dyadic budget) : budget_(std::move(budget)) {}

  const Dyadic& budget() const { return budget_; }
  const Dyadic& total() const { return total_; }

  const Dyadic& at(const Key& key) const {
    static const Dyadic kZero;
    auto it = entries_.find(key);
    return it == entries_.end() ? kZero : it->second;
  }

  bool would_exceed(const Dyadic& delta) const { return budget_ < total_ + delta; }

  /// Returns false (and changes nothing) when the budget would be exceeded.
  bool try_increase(const Key& key, const Dyadic& delta, std::uint64_t step) {
    if (would_exceed(delta)) {
      return false;
    }
    entries_[key] += delta;
    total_ += delta;
    log_.push_back(LogEntry{step, key, delta});
    return true;
  }

  const std::map<Key, Dyadic>& entries() const { return entries_; }
  const std::vector<LogEntry>& log() const { return log_; }

  bool operator==(const WeightLedger& other) const {
    return budget_ == other.budget_ && total_ == other.total_ && entries_ == other.entries_;
  }

 private:
  std::map<Key, Dyadic> entries_;
  Dyadic total_;
  Dyadic budget_;
  std::vector<LogEntry> log_;
};

}  // namespace ktlab
