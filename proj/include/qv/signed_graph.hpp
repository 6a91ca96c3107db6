#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qv/quiver.hpp"

namespace qv {

enum class EdgeSign { solid, dotted };

// Undirected edge with a sign; endpoints kept with u < v.
struct SignedEdge {
  int u = 0;
  int v = 0;
  EdgeSign sign = EdgeSign::solid;
  int mult = 1;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

// Graph with solid and dotted edges.  No loops; parallel edges allowed.
// Edge list is kept normalized (endpoints ordered, sorted, merged).
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(std::vector<std::string> vertices, std::vector<SignedEdge> edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(int i) const { return vertices_.at(i); }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  int index_of(const std::string& label) const;

  // total multiplicity between u and v of the given sign
  int multiplicity(int u, int v, EdgeSign sign) const;
  int total_multiplicity(int u, int v) const;

  bool simple() const;  // at most one edge between any pair

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<SignedEdge> edges_;
};

// Toggle solid <-> dotted on every edge at vertex i.  An involution.
SignedGraph sign_change(const SignedGraph& g, int i);
SignedGraph sign_change(const SignedGraph& g, const std::string& vertex);

// All-solid signed graph of a quiver, one edge per arrow (multiplicity kept).
SignedGraph underlying_graph(const Quiver& q);

// Signed graph of a quiver with the arrows of `dotted` drawn dotted and all
// other edges solid.  Members of `dotted` must be arrows of q.
SignedGraph underlying_graph(const Quiver& q, const ArrowSet& dotted);

// Per-cycle parity of the number of dotted edges (0 = even, 1 = odd).
// Each cycle must be a genuine cycle of g through single edges.
std::vector<int> parity_profile(const SignedGraph& g,
                                const std::vector<Cycle>& cycles);

// Chordless cycles of the underlying unsigned graph (simple graphs only).
std::vector<Cycle> full_cycles(const SignedGraph& g);

// Vertex set U, with U != all vertices, such that applying sign changes at
// the members of U transforms g1 into g2; std::nullopt if no such set.
// Among valid sets, the smallest is returned (ties: lexicographically least
// by vertex index).  Requires identical underlying unsigned graphs.
std::optional<std::vector<int>> find_sign_change_set(const SignedGraph& g1,
                                                     const SignedGraph& g2);

}  // namespace qv
