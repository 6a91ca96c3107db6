#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qv/mutation_class.hpp"
#include "qv/quiver.hpp"

namespace qv {

struct MinimalInfiniteResult {
  bool minimal_infinite = false;

  // q itself: finite certificate when q is of finite type
  TypeResult whole;

  // vertex whose deletion leaves an infinite component (when that is why
  // the answer is negative)
  std::optional<std::string> witness_vertex;

  // per deleted vertex, the Dynkin types of the surviving components
  // (filled for the positive answer)
  std::vector<std::pair<std::string, std::vector<DynkinType>>> deletions;
};

// q is minimal infinite iff it is of infinite type and every single-vertex
// deletion leaves only finite-type components.  Requires a connected input.
MinimalInfiniteResult is_minimal_infinite(const Quiver& q);

struct StructureReport {
  bool ok = false;
  bool cycle_graph = false;  // underlying graph is a single cycle
  std::optional<std::pair<int, int>> cycle_arms;  // for the cycle-graph case
  std::vector<std::string> violations;
};

// Structural checks for a minimal infinite quiver: when the underlying
// graph is a single cycle the orientation must be non-oriented; otherwise
// every full cycle must be oriented; and no double arrows for n >= 3.
// Throws qv::error when q is not minimal infinite.
StructureReport check_structure(const Quiver& q);

}  // namespace qv
