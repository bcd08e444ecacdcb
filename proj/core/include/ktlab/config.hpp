#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ktlab/dyadic.hpp"

namespace ktlab {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Flat key=value run configuration. Together with the seed it fully
/// determines a run: identical config + seed reproduce byte-identical
/// traces and audits.
struct RunConfig {
  std::string variant = "existence";
  std::string us = "noop";
  std::string opponent = "noop";
  Dyadic our_budget{1};
  Dyadic opponent_budget{1};
  std::uint64_t horizon = 1000;
  std::uint64_t seed = 1;

  std::optional<Dyadic> c;
  std::string machine;      // oracle table path (incompleteness)
  std::string labels;       // explicit label file path (lowness)
  std::string sem_machine;  // semimeasure machine table path (lowness)

  std::uint64_t gamma_steps = 100000;
  std::uint64_t sim_steps = 100000;
  std::uint64_t label_depth = 96;
  std::uint64_t strong_depth = 128;
  std::uint64_t portion_shift = 7;

  std::uint64_t lengths_offset = 2;
  std::uint64_t lengths_stride = 2;
  std::uint64_t points_offset = 1;
  std::uint64_t points_stride = 2;

  std::string engage;  // path bits steered to by refuse/lowmatch opponents

  std::string trace_out = "trace.txt";
  std::string audit_out = "audit.txt";

  static RunConfig load(const std::string& path);
  static RunConfig parse(std::istream& in, const std::string& origin);

  /// KTLAB_GAMMA_STEPS, KTLAB_SIM_STEPS, KTLAB_LABEL_DEPTH and
  /// KTLAB_STRONG_DEPTH override the corresponding step bounds.
  void apply_env_overrides();

  std::string serialize() const;
};

}  // namespace ktlab
