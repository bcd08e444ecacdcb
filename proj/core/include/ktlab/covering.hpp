#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ktlab/dyadic.hpp"
#include "ktlab/node.hpp"

namespace ktlab {

/// An effectively open subset of Cantor space given as a finite union of
/// cylinders with pairwise prefix-incomparable roots. Normalization merges
/// sibling pairs and drops covered prefixes, so the measure is simply the
/// sum of 2^-|u| over the roots, exactly.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet from_prefixes(std::vector<Node> prefixes);

  /// One prefix per line ("-" for the whole space); round-trips exactly.
  static IntervalSet load(const std::string& path);
  static IntervalSet parse(std::istream& in, const std::string& origin);
  void save(std::ostream& out) const;

  const std::vector<Node>& prefixes() const { return prefixes_; }
  bool empty() const { return prefixes_.empty(); }

  Dyadic measure() const;

  /// Whether the cylinder [u] is entirely contained in this set.
  bool covers(const Node& u) const;
  /// Whether [u] meets this set at all.
  bool intersects(const Node& u) const;
  bool contains_point_prefix(const Node& x) const;  // some root is a prefix of x

  struct Factorization {
    std::vector<Node> pieces;
  };
  struct FactorizationFailure {
    std::size_t position;
  };
  /// Greedy left-to-right factorization of x into roots; unique because the
  /// roots are prefix-incomparable. Failure reports the first position
  /// where no root matches; it is a value, not an error.
  std::variant<Factorization, FactorizationFailure> decompose_tail(const Node& x) const;

  /// The quotient V/u: all sequences alpha with u*alpha in V.
  IntervalSet quotient(const Node& u) const;

 private:
  std::vector<Node> prefixes_;  // normalized, sorted by (length, lex)
};

/// measure(U)^n: the measure of "n pieces of U, then anything".
Dyadic iterated_measure(const IntervalSet& U, std::uint64_t n);

/// Smallest n with measure(U)^n < 2^-t; requires measure(U) < 1. This is
/// the effective-convergence witness for the tail decomposition argument.
std::uint64_t iterations_below(const IntervalSet& U, std::uint64_t t);

struct EscapeResult {
  std::vector<Node> pieces;        // u_i, u_j, ... chosen per round
  Node sequence;                   // their concatenation
  std::optional<std::uint64_t> obstruction_round;  // set when every root was covered
};

/// Iterates the covering argument: each round picks the first root of U not
/// fully covered by the current V, appends it, and divides V by it. An
/// obstruction means V covers U's finite structure at that round.
EscapeResult escape_sequence(const IntervalSet& U, const IntervalSet& V, std::uint64_t rounds);

/// An open set {x : exists i, x_i < z_i} in a finite-coordinate product of
/// unit intervals; coordinates beyond the listed thresholds are free.
class ProductOpenSet {
 public:
  ProductOpenSet() = default;

  /// Builds the open set matching a converging series: thresholds are the
  /// series terms; all must lie strictly inside (0, 1).
  static ProductOpenSet series_to_open(std::vector<Dyadic> terms);

  /// Direct construction; thresholds in [0, 1).
  static ProductOpenSet from_thresholds(std::vector<Dyadic> thresholds);

  /// One dyadic threshold per line ("mantissa exponent").
  static ProductOpenSet load(const std::string& path);
  static ProductOpenSet parse(std::istream& in, const std::string& origin);
  void save(std::ostream& out) const;

  const std::vector<Dyadic>& thresholds() const { return thresholds_; }

  /// 1 - prod(1 - z_i), exact.
  Dyadic measure() const;
  /// prod(1 - z_i): positive iff the matching series "converges" at this
  /// finite truncation.
  Dyadic complement_measure() const;

  /// Coordinate-wise supremum extraction: b_i = sup{z : the closed slab
  /// [0,z] at coordinate i lies inside the set} = z_i. Pointwise dominates
  /// the terms of any series whose open set this one contains.
  std::vector<Dyadic> extract_series() const { return thresholds_; }

 private:
  std::vector<Dyadic> thresholds_;
};

}  // namespace ktlab
