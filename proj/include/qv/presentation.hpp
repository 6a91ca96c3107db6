#pragma once

#include <string>
#include <vector>

#include "qv/quiver.hpp"
#include "qv/unit_form.hpp"

namespace qv {

// Relations from `source` to `target`: the sum of the listed parallel paths
// is zero.  Paths are vertex index sequences including both endpoints and
// are pairwise internally disjoint; a group holds one to three of them.
struct RelationGroup {
  int source = 0;
  int target = 0;
  std::vector<std::vector<int>> paths;

  friend bool operator==(const RelationGroup&, const RelationGroup&) = default;
};

// Quiver with relations.
struct Presentation {
  Quiver quiver;
  std::vector<RelationGroup> relations;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Check the Presentation invariants; throws qv::error on violation.
void validate(const Presentation& p);

// Tits form: a_ij = -(arrows between i and j) + (relation groups between
// i and j).  Requires an acyclic quiver.
UnitForm tits_form(const Presentation& p);

// Add one arrow target -> source per relation group and drop the relations.
// Requires an acyclic quiver; rejects additions that would create a loop,
// a 2-cycle, or a parallel copy of another group's arrow.
Quiver to_cluster_quiver(const Presentation& p);

// All paths from a.dst to a.src that close with the arrow into a full
// oriented cycle and do not pass through any oriented cycle, in
// lexicographic order.  Throws when the arrow lies on no such cycle.
std::vector<std::vector<int>> shortest_paths(const Quiver& q, Arrow a);

// The presentation obtained by removing an admissible arrow set: quiver
// minus the arrows of s, one relation group per removed arrow holding its
// shortest paths (computed in q).
Presentation induced_presentation(const Quiver& q, const ArrowSet& s);

// Presentation of the tame concealed algebra attached to a minimal infinite
// cluster quiver: the quiver itself for the two-vertex and cycle-shaped
// cases, otherwise the one induced by the unique positive admissible set.
Presentation tame_concealed_presentation(const Quiver& q);

struct SynthesisReport {
  Presentation presentation;  // relations attached to q itself
  std::vector<int> arms;      // paths per group ("arms" of the star shape)
  int max_arms = 0;
};

// One relation group per arrow lying on an oriented cycle, each holding the
// arrow's shortest paths; enforces 1 <= r <= 3 and internal disjointness.
// Requires a minimal infinite quiver.
SynthesisReport synthesize_relations(const Quiver& q);

// Equality up to vertex relabeling, group order and path order.
bool presentation_equivalent(const Presentation& a, const Presentation& b);

struct RoundTripReport {
  bool ok = false;
  std::string detail;
  RadicalVector radical;      // of the Tits form of the input
  Presentation regenerated;
};

// Verify that rebuilding the cluster quiver and removing its positive
// admissible set recovers the input presentation.
RoundTripReport round_trip_check(const Presentation& p);

}  // namespace qv
