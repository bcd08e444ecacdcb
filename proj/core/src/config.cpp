#include "ktlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ktlab {

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  return parse(in, path);
}

RunConfig RunConfig::parse(std::istream& in, const std::string& origin) {
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "variant") cfg.variant = value;
      else if (key == "us") cfg.us = value;
      else if (key == "opponent") cfg.opponent = value;
      else if (key == "our_budget") cfg.our_budget = Dyadic::parse(value);
      else if (key == "opponent_budget") cfg.opponent_budget = Dyadic::parse(value);
      else if (key == "horizon") cfg.horizon = std::stoull(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "c") cfg.c = Dyadic::parse(value);
      else if (key == "machine") cfg.machine = value;
      else if (key == "labels") cfg.labels = value;
      else if (key == "sem_machine") cfg.sem_machine = value;
      else if (key == "gamma_steps") cfg.gamma_steps = std::stoull(value);
      else if (key == "sim_steps") cfg.sim_steps = std::stoull(value);
      else if (key == "label_depth") cfg.label_depth = std::stoull(value);
      else if (key == "strong_depth") cfg.strong_depth = std::stoull(value);
      else if (key == "portion_shift") cfg.portion_shift = std::stoull(value);
      else if (key == "lengths_offset") cfg.lengths_offset = std::stoull(value);
      else if (key == "lengths_stride") cfg.lengths_stride = std::stoull(value);
      else if (key == "points_offset") cfg.points_offset = std::stoull(value);
      else if (key == "points_stride") cfg.points_stride = std::stoull(value);
      else if (key == "engage") cfg.engage = value;
      else if (key == "trace_out") cfg.trace_out = value;
      else if (key == "audit_out") cfg.audit_out = value;
      else throw ConfigError("unknown key '" + key + "'");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": bad value for '" + key +
                        "': " + e.what());
    }
  }
  return cfg;
}

void RunConfig::apply_env_overrides() {
  auto u64_env = [](const char* name, std::uint64_t& slot) {
    if (const char* v = std::getenv(name)) {
      slot = std::strtoull(v, nullptr, 10);
    }
  };
  u64_env("KTLAB_GAMMA_STEPS", gamma_steps);
  u64_env("KTLAB_SIM_STEPS", sim_steps);
  u64_env("KTLAB_LABEL_DEPTH", label_depth);
  u64_env("KTLAB_STRONG_DEPTH", strong_depth);
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "variant=" << variant << '\n';
  out << "us=" << us << '\n';
  out << "opponent=" << opponent << '\n';
  out << "our_budget=" << our_budget.str() << '\n';
  out << "opponent_budget=" << opponent_budget.str() << '\n';
  out << "horizon=" << horizon << '\n';
  out << "seed=" << seed << '\n';
  if (c) out << "c=" << c->str() << '\n';
  if (!machine.empty()) out << "machine=" << machine << '\n';
  if (!labels.empty()) out << "labels=" << labels << '\n';
  if (!sem_machine.empty()) out << "sem_machine=" << sem_machine << '\n';
  out << "gamma_steps=" << gamma_steps << '\n';
  out << "sim_steps=" << sim_steps << '\n';
  out << "label_depth=" << label_depth << '\n';
  out << "strong_depth=" << strong_depth << '\n';
  out << "portion_shift=" << portion_shift << '\n';
  out << "lengths_offset=" << lengths_offset << '\n';
  out << "lengths_stride=" << lengths_stride << '\n';
  out << "points_offset=" << points_offset << '\n';
  out << "points_stride=" << points_stride << '\n';
  if (!engage.empty()) out << "engage=" << engage << '\n';
  out << "trace_out=" << trace_out << '\n';
  out << "audit_out=" << audit_out << '\n';
  return out.str();
}

}  // namespace ktlab
