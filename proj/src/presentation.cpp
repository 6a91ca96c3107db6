#include "qv/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qv/minimal_infinite.hpp"
#include "qv/signed_graph.hpp"
#include "qv/splus.hpp"

namespace qv {

void validate(const Presentation& p) {
  const auto& q = p.quiver;
  for (const auto& g : p.relations) {
    if (g.source == g.target) throw error("relation from a vertex to itself");
    if (g.paths.empty() || g.paths.size() > 3)
      throw error("relation group must hold 1 to 3 paths");
    std::set<int> interior_seen;
    for (const auto& path : g.paths) {
      if (path.size() < 3)
        throw error("relation path must have at least two arrows");
      if (path.front() != g.source || path.back() != g.target)
        throw error("relation path endpoints do not match its group");
      std::set<int> on_path;
      for (size_t t = 0; t + 1 < path.size(); ++t) {
        if (q.entry(path[t], path[t + 1]) <= 0)
          throw error("relation path uses a missing arrow " +
                      q.vertex(path[t]) + "->" + q.vertex(path[t + 1]));
        if (!on_path.insert(path[t]).second)
          throw error("relation path revisits a vertex");
      }
      if (on_path.count(path.back()))
        throw error("relation path revisits a vertex");
      for (size_t t = 1; t + 1 < path.size(); ++t)
        if (!interior_seen.insert(path[t]).second)
          throw error("relation paths are not internally disjoint");
    }
  }
}

UnitForm tits_form(const Presentation& p) {
  if (!p.quiver.is_acyclic()) throw error("quiver has an oriented cycle");
  validate(p);
  const int n = p.quiver.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int arrows = std::abs(p.quiver.entry(i, j));
      a[i][j] -= arrows;
      a[j][i] -= arrows;
    }
  for (const auto& g : p.relations) {
    a[g.source][g.target] += 1;
    a[g.target][g.source] += 1;
  }
  return UnitForm(p.quiver.vertices(), std::move(a));
}

Quiver to_cluster_quiver(const Presentation& p) {
  validate(p);
  if (!p.quiver.is_acyclic()) throw error("quiver has an oriented cycle");
  auto m = p.quiver.matrix();
  std::set<std::pair<int, int>> used;
  for (const auto& g : p.relations) {
    if (!used.insert({std::min(g.source, g.target),
                      std::max(g.source, g.target)}).second)
      throw error("two relation groups between the same vertices");
    if (m[g.source][g.target] > 0)
      throw error("relation parallel to an arrow would create a 2-cycle");
    // arrow target -> source
    m[g.target][g.source] += 1;
    m[g.source][g.target] -= 1;
  }
  return Quiver(p.quiver.vertices(), std::move(m));
}

namespace {

// forbidden windows: all-but-one-arrow runs of every full oriented cycle
std::vector<std::vector<int>> cycle_windows(const std::vector<Cycle>& cycles) {
  std::vector<std::vector<int>> windows;
  for (const auto& c : cycles) {
    if (!c.oriented) continue;
    const int len = c.length();
    for (int s = 0; s < len; ++s) {
      std::vector<int> w;
      for (int t = 0; t < len; ++t) w.push_back(c.vertices[(s + t) % len]);
      windows.push_back(std::move(w));
    }
  }
  return windows;
}

bool contains_proper_window(const std::vector<int>& path,
                            const std::vector<std::vector<int>>& windows) {
  for (const auto& w : windows) {
    if (w.size() >= path.size()) continue;  // only proper sub-paths count
    for (size_t s = 0; s + w.size() <= path.size(); ++s)
      if (std::equal(w.begin(), w.end(), path.begin() + s)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> shortest_paths(const Quiver& q, Arrow a) {
  if (q.entry(a.src, a.dst) <= 0)
    throw error("no arrow " + q.vertex(a.src) + "->" + q.vertex(a.dst));
  const int n = q.size();
  const int from = a.dst, to = a.src;

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.entry(i, j) != 0) adj[i][j] = true;

  const auto windows = cycle_windows(full_cycles(q));

  std::vector<std::vector<int>> paths;
  std::vector<int> path{from};
  std::vector<bool> onpath(n, false);
  onpath[from] = true;

  const auto dfs = [&](auto&& self, int v) -> void {
    for (int w = 0; w < n; ++w) {
      if (q.entry(v, w) <= 0 || onpath[w]) continue;
      if (w == to) {
        if (path.size() < 2) continue;  // need at least two arrows
        bool chord = false;
        for (size_t t = 1; t < path.size() && !chord; ++t)
          if (adj[path[t]][to] && !(t + 1 == path.size())) chord = true;
        if (chord) continue;
        auto full = path;
        full.push_back(to);
        if (!contains_proper_window(full, windows)) paths.push_back(full);
        continue;
      }
      // chordless growth: w may touch only the path's last vertex
      bool chord = false;
      for (size_t t = 0; t + 1 < path.size() && !chord; ++t)
        if (adj[path[t]][w]) chord = true;
      if (chord) continue;
      path.push_back(w);
      onpath[w] = true;
      self(self, w);
      onpath[w] = false;
      path.pop_back();
    }
  };
  dfs(dfs, from);

  if (paths.empty())
    throw error("arrow " + q.vertex(a.src) + "->" + q.vertex(a.dst) +
                " lies on no full oriented cycle");
  std::sort(paths.begin(), paths.end());
  return paths;
}

namespace {

void check_admissible(const Quiver& q, const ArrowSet& s) {
  const auto arrows = q.arrows();
  std::set<Arrow> on_cycles;
  for (const auto& a : s)
    if (!std::binary_search(arrows.begin(), arrows.end(), a))
      throw error("set contains a non-arrow");
  for (const auto& c : full_cycles(q)) {
    if (!c.oriented) continue;
    int hits = 0;
    for (int t = 0; t < c.length(); ++t) {
      Arrow a{c.vertices[t], c.vertices[(t + 1) % c.length()]};
      on_cycles.insert(a);
      if (std::binary_search(s.begin(), s.end(), a)) ++hits;
    }
    if (hits != 1) throw error("set is not admissible: a full oriented cycle "
                               "does not meet it exactly once");
  }
  for (const auto& a : s)
    if (!on_cycles.count(a))
      throw error("set is not admissible: arrow on no full oriented cycle");
}

}  // namespace

Presentation induced_presentation(const Quiver& q, const ArrowSet& s_in) {
  const ArrowSet s = normalized(s_in);
  check_admissible(q, s);

  auto m = q.matrix();
  for (const auto& a : s) {
    m[a.src][a.dst] -= 1;
    m[a.dst][a.src] += 1;
  }
  Presentation p;
  p.quiver = Quiver(q.vertices(), std::move(m));
  if (!p.quiver.is_acyclic())
    throw error("removing the set leaves an oriented cycle");

  for (const auto& a : s) {
    RelationGroup g;
    g.source = a.dst;
    g.target = a.src;
    g.paths = shortest_paths(q, a);
    p.relations.push_back(std::move(g));
  }
  std::sort(p.relations.begin(), p.relations.end(),
            [](const RelationGroup& x, const RelationGroup& y) {
              return std::tie(x.source, x.target) <
                     std::tie(y.source, y.target);
            });
  validate(p);

  if (tits_form(p) != form_from_signed_graph(underlying_graph(q, s)))
    throw error("Tits form does not match the signed-graph form");
  return p;
}

Presentation tame_concealed_presentation(const Quiver& q) {
  if (!is_minimal_infinite(q).minimal_infinite)
    throw error("quiver is not minimal infinite");
  if (q.size() == 2) return {q, {}};
  const auto type = classify_graph(underlying_graph(q));
  if (type && type->family == DynkinType::A_tilde) return {q, {}};
  return induced_presentation(q, find_splus(q).splus);
}

SynthesisReport synthesize_relations(const Quiver& q) {
  if (!is_minimal_infinite(q).minimal_infinite)
    throw error("quiver is not minimal infinite");
  SynthesisReport rep;
  rep.presentation.quiver = q;
  for (const auto& a : q.arrows()) {
    if (!has_directed_path(q, a.dst, a.src)) continue;  // on no oriented cycle
    RelationGroup g;
    g.source = a.dst;
    g.target = a.src;
    g.paths = shortest_paths(q, a);
    const int r = static_cast<int>(g.paths.size());
    if (r > 3) throw error("more than three shortest paths at arrow " +
                           q.vertex(a.src) + "->" + q.vertex(a.dst));
    std::set<int> interior;
    for (const auto& path : g.paths)
      for (size_t t = 1; t + 1 < path.size(); ++t)
        if (!interior.insert(path[t]).second)
          throw error("shortest paths are not internally disjoint at arrow " +
                      q.vertex(a.src) + "->" + q.vertex(a.dst));
    rep.arms.push_back(r);
    rep.max_arms = std::max(rep.max_arms, r);
    rep.presentation.relations.push_back(std::move(g));
  }
  return rep;
}

namespace {

std::vector<RelationGroup> normalized_relations(
    const std::vector<RelationGroup>& rels) {
  auto out = rels;
  for (auto& g : out) std::sort(g.paths.begin(), g.paths.end());
  std::sort(out.begin(), out.end(), [](const RelationGroup& x,
                                       const RelationGroup& y) {
    return std::tie(x.source, x.target, x.paths) <
           std::tie(y.source, y.target, y.paths);
  });
  return out;
}

std::vector<RelationGroup> mapped_relations(
    const std::vector<RelationGroup>& rels, const std::vector<int>& perm) {
  auto out = rels;
  for (auto& g : out) {
    g.source = perm[g.source];
    g.target = perm[g.target];
    for (auto& path : g.paths)
      for (auto& v : path) v = perm[v];
  }
  return out;
}

// enumerate permutations identifying the matrices, stop at the first that
// also matches the relations
bool iso_search(const Presentation& a, const Presentation& b,
                std::vector<int>& perm, std::vector<bool>& used, size_t t) {
  const int n = a.quiver.size();
  if (t == static_cast<size_t>(n))
    return normalized_relations(mapped_relations(a.relations, perm)) ==
           normalized_relations(b.relations);
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (size_t s = 0; s < t && ok; ++s) {
      if (a.quiver.entry(t, s) != b.quiver.entry(v, perm[s])) ok = false;
      if (a.quiver.entry(s, t) != b.quiver.entry(perm[s], v)) ok = false;
    }
    if (!ok) continue;
    perm[t] = v;
    used[v] = true;
    if (iso_search(a, b, perm, used, t + 1)) return true;
    used[v] = false;
  }
  return false;
}

}  // namespace

bool presentation_equivalent(const Presentation& a, const Presentation& b) {
  if (a.quiver.size() != b.quiver.size()) return false;
  if (a.relations.size() != b.relations.size()) return false;
  if (a.quiver == b.quiver &&
      normalized_relations(a.relations) == normalized_relations(b.relations))
    return true;
  std::vector<int> perm(a.quiver.size(), -1);
  std::vector<bool> used(a.quiver.size(), false);
  return iso_search(a, b, perm, used, 0);
}

RoundTripReport round_trip_check(const Presentation& p) {
  RoundTripReport rep;
  validate(p);
  const Quiver q = to_cluster_quiver(p);

  {
    const auto f = tits_form(p);
    if (definiteness(f) ==
        Definiteness{Definiteness::positive_semidefinite, 1})
      rep.radical = radical_vector(f);
  }

  if (connected_components(q).size() != 1) {
    rep.detail = "cluster quiver is disconnected";
    return rep;
  }
  const auto mi = is_minimal_infinite(q);
  if (!mi.minimal_infinite) {
    rep.detail = mi.whole.finite
                     ? "cluster quiver is of finite type"
                     : "cluster quiver is not minimal infinite (deleting " +
                           *mi.witness_vertex + " stays infinite)";
    return rep;
  }
  rep.regenerated = tame_concealed_presentation(q);
  if (!presentation_equivalent(p, rep.regenerated)) {
    rep.detail = "regenerated presentation differs";
    return rep;
  }
  rep.ok = true;
  rep.detail = "round trip exact";
  return rep;
}

}  // namespace qv
