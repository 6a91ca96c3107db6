#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qv/quiver.hpp"
#include "qv/signed_graph.hpp"

namespace qv {

// Dynkin or extended Dynkin family.
struct DynkinType {
  enum Family { A, D, E, A_tilde, D_tilde, E_tilde };
  Family family = A;
  int rank = 0;
  // arm lengths (p, q) for acyclic A~ quivers, when known
  std::optional<std::pair<int, int>> cycle_arms;

  bool extended() const {
    return family == A_tilde || family == D_tilde || family == E_tilde;
  }
  std::string name() const;

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// Structural recognition of Dynkin / extended Dynkin graphs on a connected
// simple unsigned graph (signs are ignored); nullopt for anything else.
std::optional<DynkinType> classify_graph(const SignedGraph& g);

// (p, q) arm lengths of an acyclic quiver whose underlying graph is a cycle:
// p arrows one way around, q the other, p >= q >= 1.
std::optional<std::pair<int, int>> cycle_orientation_arms(const Quiver& q);

// Matrix in canonical vertex order: minimal, over all vertex permutations,
// under the lexicographic order used by the search.  Two quivers are
// isomorphic iff their canonical matrices are equal.
struct CanonicalQuiver {
  std::vector<std::vector<int>> matrix;
  std::vector<int> perm;  // canonical position -> original vertex index

  friend bool operator==(const CanonicalQuiver& a, const CanonicalQuiver& b) {
    return a.matrix == b.matrix;
  }
  friend bool operator<(const CanonicalQuiver& a, const CanonicalQuiver& b) {
    return a.matrix < b.matrix;
  }

  // quiver with vertices named by canonical position ("1", "2", ...)
  Quiver quiver() const;
};

CanonicalQuiver canonical_form(const Quiver& q);

struct MutationClass {
  bool complete = false;  // false: aborted at the class limit
  std::vector<CanonicalQuiver> classes;  // sorted
};

// BFS closure of q under single-vertex mutations, deduplicated by canonical
// form; aborts once more than `limit` classes are seen.
MutationClass enumerate_mutation_class(const Quiver& q,
                                       std::size_t limit = 1'000'000);

struct TypeResult {
  bool finite = false;
  // finite: an acyclic Dynkin representative of the class and its type(s),
  //   one per connected component, plus the mutation path reaching it;
  // infinite: a class member with an entry of weight >= 2 and the path to it.
  Quiver witness;
  std::vector<std::string> path;  // vertex labels mutated, in order
  std::vector<DynkinType> types;  // finite case only
};

// Finite-type decision with 2-finiteness pruning: the class is of finite
// type iff no member has |b_ij| >= 2.  Always terminates.  Disconnected
// inputs are handled componentwise through the same search.
TypeResult is_finite_type(const Quiver& q);

// Some acyclic member of the mutation class, or nullopt if the class was
// exhausted without finding one.  Throws qv::error once `limit` classes
// were expanded without an answer.
std::optional<Quiver> acyclic_representative(const Quiver& q,
                                             std::size_t limit = 1'000'000);

}  // namespace qv
