#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ktlab/dyadic.hpp"
#include "ktlab/node.hpp"

namespace ktlab {

/// "Please add eta to the weight of object i."
struct Label {
  std::uint64_t object;
  Dyadic eta;

  bool operator==(const Label&) const = default;
};

/// A computable labelling of the binary tree: at most one label per node,
/// and along every path the label weights sum to at most 1. Obeying all
/// labels along a path yields a semimeasure on objects.
class LabelledTree {
 public:
  virtual ~LabelledTree() = default;
  virtual std::optional<Label> label(const Node& node) const = 0;
};

/// Labelling backed by an explicit finite table, loadable from a file with
/// lines "node object eta_mantissa eta_exponent" (node "-" for the root).
/// Load rejects duplicate nodes and paths whose label sum exceeds 1;
/// non-dyadic weights are not representable in this format at all.
class ExplicitLabelledTree : public LabelledTree {
 public:
  explicit ExplicitLabelledTree(std::map<Node, Label> labels);

  static std::shared_ptr<const ExplicitLabelledTree> load(const std::string& path);
  static std::shared_ptr<const ExplicitLabelledTree> parse(std::istream& in,
                                                           const std::string& origin);

  std::optional<Label> label(const Node& node) const override;

  const std::map<Node, Label>& labels() const { return labels_; }

 private:
  std::map<Node, Label> labels_;
};

/// A machine that generates a lower semicomputable semimeasure on objects
/// when given oracle access to a path: a table of emissions, each visible
/// once the oracle answers cover its prefix and the step stamp is reached.
class SemimeasureMachine {
 public:
  struct Emission {
    Node prefix;
    std::uint64_t object;
    Dyadic delta;
    std::uint64_t stamp;
  };

  SemimeasureMachine() = default;
  explicit SemimeasureMachine(std::vector<Emission> emissions);

  /// Lines: "prefix object mantissa exponent stamp".
  static SemimeasureMachine load(const std::string& path);
  static SemimeasureMachine parse(std::istream& in, const std::string& origin);

  /// Emissions visible along a given oracle prefix within the step bound,
  /// in stamp order (ties by table order).
  std::vector<Emission> emissions_along(const Node& oracle_prefix, std::uint64_t steps) const;

  const std::vector<Emission>& emissions() const { return emissions_; }

 private:
  std::vector<Emission> emissions_;
};

/// Converts a semimeasure machine into an equivalent computable labelling:
/// each emission becomes a pending request at its minimal prefix; every node
/// consumes at most one request from the queue of requests pending on the
/// path to it, and the rest spill to deeper nodes. Requests are trimmed so
/// per-path sums never exceed 1. Along any path the drained labels replay
/// the machine's emissions exactly (when the machine itself was within
/// budget on that path).
class MachineLabelledTree : public LabelledTree {
 public:
  MachineLabelledTree(SemimeasureMachine machine, std::uint64_t depth, std::uint64_t steps);

  std::optional<Label> label(const Node& node) const override;

 private:
  SemimeasureMachine machine_;
  std::uint64_t depth_;
  std::uint64_t steps_;
};

std::shared_ptr<const LabelledTree> machine_to_labels(SemimeasureMachine machine,
                                                      std::uint64_t depth, std::uint64_t steps);

}  // namespace ktlab
