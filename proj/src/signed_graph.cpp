#include "qv/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qv {

SignedGraph::SignedGraph(std::vector<std::string> vertices,
                         std::vector<SignedEdge> edges)
    : vertices_(std::move(vertices)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw error("duplicate vertex label: " + v);
  // normalize: order endpoints, merge same-sign parallels, sort
  std::map<std::tuple<int, int, EdgeSign>, int> acc;
  for (auto e : edges) {
    if (e.u == e.v) throw error("loop at vertex " + vertices_.at(e.u));
    if (e.mult < 1) throw error("edge multiplicity must be >= 1");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= size()) throw error("edge endpoint out of range");
    acc[{e.u, e.v, e.sign}] += e.mult;
  }
  for (const auto& [key, mult] : acc)
    edges_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
}

int SignedGraph::index_of(const std::string& label) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  throw error("unknown vertex: " + label);
}

int SignedGraph::multiplicity(int u, int v, EdgeSign sign) const {
  if (u > v) std::swap(u, v);
  int m = 0;
  for (const auto& e : edges_)
    if (e.u == u && e.v == v && e.sign == sign) m += e.mult;
  return m;
}

int SignedGraph::total_multiplicity(int u, int v) const {
  return multiplicity(u, v, EdgeSign::solid) +
         multiplicity(u, v, EdgeSign::dotted);
}

bool SignedGraph::simple() const {
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (total_multiplicity(u, v) > 1) return false;
  return true;
}

SignedGraph sign_change(const SignedGraph& g, int i) {
  if (i < 0 || i >= g.size()) throw error("vertex out of range");
  auto edges = g.edges();
  for (auto& e : edges)
    if (e.u == i || e.v == i)
      e.sign = e.sign == EdgeSign::solid ? EdgeSign::dotted : EdgeSign::solid;
  return SignedGraph(g.vertices(), std::move(edges));
}

SignedGraph sign_change(const SignedGraph& g, const std::string& vertex) {
  return sign_change(g, g.index_of(vertex));
}

SignedGraph underlying_graph(const Quiver& q) {
  return underlying_graph(q, {});
}

SignedGraph underlying_graph(const Quiver& q, const ArrowSet& dotted) {
  const auto arrows = q.arrows();
  for (const auto& a : dotted)
    if (!std::binary_search(arrows.begin(), arrows.end(), a))
      throw error("dotted set contains a non-arrow");
  std::vector<SignedEdge> edges;
  for (const auto& a : arrows) {
    const bool dot = std::binary_search(dotted.begin(), dotted.end(), a);
    edges.push_back({a.src, a.dst, dot ? EdgeSign::dotted : EdgeSign::solid,
                     q.entry(a.src, a.dst)});
  }
  return SignedGraph(q.vertices(), std::move(edges));
}

std::vector<int> parity_profile(const SignedGraph& g,
                                const std::vector<Cycle>& cycles) {
  std::vector<int> out;
  for (const auto& c : cycles) {
    if (c.length() < 3) throw error("cycle shorter than 3 vertices");
    std::set<int> distinct(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(distinct.size()) != c.length())
      throw error("cycle vertices are not distinct");
    int dotted = 0;
    for (int t = 0; t < c.length(); ++t) {
      const int u = c.vertices[t];
      const int v = c.vertices[(t + 1) % c.length()];
      if (g.total_multiplicity(u, v) != 1)
        throw error("cycle step is not a single edge of the graph");
      dotted += g.multiplicity(u, v, EdgeSign::dotted);
    }
    out.push_back(dotted % 2);
  }
  return out;
}

std::vector<Cycle> full_cycles(const SignedGraph& g) {
  if (!g.simple()) throw error("multiple edges present");
  // reuse the quiver enumeration through an arbitrary orientation
  const int n = g.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    m[e.u][e.v] = 1;
    m[e.v][e.u] = -1;
  }
  auto cycles = full_cycles(Quiver(g.vertices(), std::move(m)));
  for (auto& c : cycles) c.oriented = false;
  return cycles;
}

std::optional<std::vector<int>> find_sign_change_set(const SignedGraph& g1,
                                                     const SignedGraph& g2) {
  if (g1.vertices() != g2.vertices())
    throw error("signed graphs have different vertex sets");
  const int n = g1.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g1.total_multiplicity(u, v) != g2.total_multiplicity(u, v))
        throw error("signed graphs have different underlying graphs");

  // One GF(2) variable per vertex; an edge pair {u,v} flips iff exactly one
  // endpoint is chosen.  Pairs whose sign pattern is flip-invariant give no
  // equation.
  // Track constrained adjacency for the component structure of the solution
  // space.
  std::vector<std::vector<int>> want(n, std::vector<int>(n, -1));  // -1 free
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g1.total_multiplicity(u, v) == 0) continue;
      const int s1 = g1.multiplicity(u, v, EdgeSign::solid);
      const int d1 = g1.multiplicity(u, v, EdgeSign::dotted);
      const int s2 = g2.multiplicity(u, v, EdgeSign::solid);
      const int d2 = g2.multiplicity(u, v, EdgeSign::dotted);
      const bool same = (s2 == s1 && d2 == d1);
      const bool flipped = (s2 == d1 && d2 == s1);
      if (same && flipped) continue;  // s1 == d1, no constraint
      if (same)
        want[u][v] = 0;
      else if (flipped)
        want[u][v] = 1;
      else
        return std::nullopt;
    }

  // propagate over constrained components; within each component the two
  // solutions are a set and its complement
  std::vector<int> val(n, -1);
  std::vector<std::vector<int>> comp_members;
  for (int s = 0; s < n; ++s) {
    if (val[s] != -1) continue;
    std::vector<int> members, stack{s};
    val[s] = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y = 0; y < n; ++y) {
        const int w = x < y ? want[x][y] : want[y][x];
        if (w == -1) continue;
        const int need = val[x] ^ w;
        if (val[y] == -1) {
          val[y] = need;
          stack.push_back(y);
        } else if (val[y] != need) {
          return std::nullopt;
        }
      }
    }
    std::sort(members.begin(), members.end());
    comp_members.push_back(std::move(members));
  }

  // per component pick the smaller side (ties: the side with the smaller
  // sorted vertex list); unconstrained components contribute nothing
  std::vector<int> out;
  for (const auto& members : comp_members) {
    std::vector<int> side0, side1;
    for (int x : members) (val[x] == 0 ? side0 : side1).push_back(x);
    const auto better = [](const std::vector<int>& a,
                           const std::vector<int>& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    };
    const auto& pick = better(side0, side1) ? side0 : side1;
    out.insert(out.end(), pick.begin(), pick.end());
  }
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) == n)
    throw error("sign change set cannot use every vertex");  // unreachable
  return out;
}

}  // namespace qv
