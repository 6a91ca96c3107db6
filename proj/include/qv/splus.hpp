#pragma once

#include <string>
#include <vector>

#include "qv/quiver.hpp"
#include "qv/unit_form.hpp"

namespace qv {

// Arrow sets meeting every full oriented cycle in an odd number of arrows,
// drawn from the arrows lying on such cycles.  Solutions of one GF(2)
// equation per cycle.
struct OddSets {
  std::vector<Arrow> variables;  // arrows on full oriented cycles, sorted
  ArrowSet particular;           // solution with lexicographically least support
  int dimension = 0;             // dimension of the GF(2) solution space
  bool enumerated = false;       // `all` holds every solution
  std::vector<ArrowSet> all;     // sorted; empty when over the cap
};

OddSets odd_sets(const Quiver& q, std::size_t cap = 1u << 20);

// All arrow sets containing exactly one arrow of each full oriented cycle
// and nothing else, in sorted order.  {} is the only such set when there
// are no oriented full cycles.  Requires a minimal infinite quiver with at
// least three vertices.
std::vector<ArrowSet> admissible_sets(const Quiver& q);

// One run of the sign-change algorithm.
struct SplusResult {
  ArrowSet initial;              // odd set the run started from
  RadicalVector initial_radical;
  std::vector<std::string> sign_changes;  // vertices flipped, sorted
  ArrowSet splus;
  RadicalVector radical;         // positive and sincere
};

// Start from the given odd set: build the signed form, read off the
// radical vector, sign-change at its negative coordinates, and return the
// dotted arrows.  Throws qv::error when the form is not positive
// semidefinite of corank 1 (the input is then not minimal infinite).
SplusResult run_splus(const Quiver& q, const ArrowSet& initial_odd);

// run_splus from the canonical initial odd set
SplusResult find_splus(const Quiver& q);

struct UniquenessReport {
  bool a_tilde_skipped = false;  // cycle-shaped quiver, nothing to check
  bool unique = false;
  ArrowSet splus;
  int odd_set_count = 0;
  // every other odd set with the labels of its negative radical coordinates
  std::vector<std::pair<ArrowSet, std::vector<std::string>>> others;
};

// Enumerate all odd sets and confirm exactly one yields a positive sincere
// radical vector.
UniquenessReport verify_uniqueness(const Quiver& q, std::size_t cap = 1u << 20);

}  // namespace qv
