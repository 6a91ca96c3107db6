#include "qv/mutation_class.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace qv {

std::string DynkinType::name() const {
  std::string base;
  switch (family) {
    case A: base = "A"; break;
    case D: base = "D"; break;
    case E: base = "E"; break;
    case A_tilde: base = "A~"; break;
    case D_tilde: base = "D~"; break;
    case E_tilde: base = "E~"; break;
  }
  base += std::to_string(rank);
  if (family == A_tilde && cycle_arms)
    base += "(" + std::to_string(cycle_arms->first) + "," +
            std::to_string(cycle_arms->second) + ")";
  return base;
}

std::optional<DynkinType> classify_graph(const SignedGraph& g) {
  const int n = g.size();
  if (n == 0) return std::nullopt;
  if (n == 1) return DynkinType{DynkinType::A, 1, {}};

  // adjacency ignoring signs
  std::vector<std::vector<int>> adj(n);
  int edge_count = 0;
  bool doubled = false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int m = g.total_multiplicity(u, v);
      if (m == 0) continue;
      if (m > 1) doubled = true;
      adj[u].push_back(v);
      adj[v].push_back(u);
      ++edge_count;
    }
  if (doubled) {
    if (n == 2 && g.total_multiplicity(0, 1) == 2)
      return DynkinType{DynkinType::A_tilde, 1, {}};
    return std::nullopt;
  }

  // connectivity
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) return std::nullopt;

  if (edge_count == n) {
    // single cycle?
    for (int v = 0; v < n; ++v)
      if (adj[v].size() != 2) return std::nullopt;
    return DynkinType{DynkinType::A_tilde, n - 1, {}};
  }
  if (edge_count != n - 1) return std::nullopt;  // neither tree nor cycle

  // tree: look at branch vertices
  std::vector<int> branch;
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    maxdeg = std::max(maxdeg, static_cast<int>(adj[v].size()));
    if (adj[v].size() >= 3) branch.push_back(v);
  }
  if (maxdeg <= 2) return DynkinType{DynkinType::A, n, {}};

  const auto arm_lengths = [&](int center) {
    // lengths of the paths hanging off `center` (valid when no other
    // branch vertex exists)
    std::vector<int> arms;
    for (int start : adj[center]) {
      int len = 1, prev = center, cur = start;
      while (adj[cur].size() == 2) {
        const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
  };

  if (branch.size() == 1) {
    const auto arms = arm_lengths(branch[0]);
    if (arms.size() == 3) {
      const int a = arms[0], b = arms[1], c = arms[2];
      if (a == 1 && b == 1) return DynkinType{DynkinType::D, c + 3, {}};
      if (a == 1 && b == 2 && c == 2) return DynkinType{DynkinType::E, 6, {}};
      if (a == 1 && b == 2 && c == 3) return DynkinType{DynkinType::E, 7, {}};
      if (a == 1 && b == 2 && c == 4) return DynkinType{DynkinType::E, 8, {}};
      if (a == 2 && b == 2 && c == 2)
        return DynkinType{DynkinType::E_tilde, 6, {}};
      if (a == 1 && b == 3 && c == 3)
        return DynkinType{DynkinType::E_tilde, 7, {}};
      if (a == 1 && b == 2 && c == 5)
        return DynkinType{DynkinType::E_tilde, 8, {}};
      return std::nullopt;
    }
    if (arms.size() == 4 && arms == std::vector<int>{1, 1, 1, 1})
      return DynkinType{DynkinType::D_tilde, 4, {}};
    return std::nullopt;
  }
  if (branch.size() == 2 && maxdeg == 3) {
    // two forks joined by a path: each branch vertex carries two leaves
    for (int b : branch) {
      int leaves = 0;
      for (int w : adj[b])
        if (adj[w].size() == 1) ++leaves;
      if (leaves != 2) return std::nullopt;
    }
    return DynkinType{DynkinType::D_tilde, n - 1, {}};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> cycle_orientation_arms(const Quiver& q) {
  const int n = q.size();
  if (n < 3 || !q.simply_laced() || !q.is_acyclic()) return std::nullopt;
  const auto type = classify_graph(underlying_graph(q));
  if (!type || type->family != DynkinType::A_tilde) return std::nullopt;
  // walk the cycle once, counting arrow directions
  int prev = -1, cur = 0, fwd = 0, bwd = 0;
  for (int step = 0; step < n; ++step) {
    int nxt = -1;
    for (int w = 0; w < n; ++w)
      if (w != prev && q.entry(cur, w) != 0) {
        nxt = w;
        break;
      }
    if (step == n - 1) nxt = 0;
    (q.entry(cur, nxt) > 0 ? fwd : bwd)++;
    prev = cur;
    cur = nxt;
  }
  if (fwd < bwd) std::swap(fwd, bwd);
  return std::make_pair(fwd, bwd);
}

namespace {

// Iterated neighborhood refinement.  The returned colors are canonical:
// they are ranks of label-independent signatures, so isomorphic quivers get
// the same color multiset and color order.
std::vector<int> refine_colors(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> colors(n, 0);
  for (int round = 0; round < n; ++round) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < n; ++w)
        if (w != v) nb.push_back({m[v][w], colors[w]});
      std::sort(nb.begin(), nb.end());
      sigs[v] = {colors[v], std::move(nb)};
    }
    std::map<Sig, int> rank;
    for (const auto& s : sigs) rank.emplace(s, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = rank[sigs[v]];
    if (fresh == colors) break;
    colors = std::move(fresh);
  }
  return colors;
}

// Backtracking search for the permutation minimizing the growth sequence
//   block(t) = b(p_t, p_0..p_{t-1}), b(p_0..p_{t-1}, p_t)
// compared lexicographically, restricted to permutations listing vertices
// in nondecreasing canonical color.  `best` is overwritten whenever a
// strictly smaller prefix is found, so every live branch matches `best`
// exactly up to its offset.
struct CanonSearch {
  const std::vector<std::vector<int>>& m;
  int n;
  std::vector<int> colors;
  std::vector<int> slot_color;  // required color at each position
  std::vector<int> best;        // flattened block sequence
  std::vector<int> best_perm;
  std::vector<int> perm;
  std::vector<bool> used;
  bool have_best = false;

  explicit CanonSearch(const std::vector<std::vector<int>>& matrix)
      : m(matrix),
        n(static_cast<int>(matrix.size())),
        colors(refine_colors(matrix)),
        slot_color(colors),
        used(n, false) {
    std::sort(slot_color.begin(), slot_color.end());
    best.assign(n * (n - 1), 0);
    best_perm.assign(n, 0);
  }

  void run() {
    if (n == 0) {
      have_best = true;
      return;
    }
    rec(0, 0);
  }

  void rec(int t, int offset) {
    if (t == n) {
      have_best = true;
      best_perm = perm;
      return;
    }
    std::vector<int> block(2 * t);
    for (int v = 0; v < n; ++v) {
      if (used[v] || colors[v] != slot_color[t]) continue;
      for (int s = 0; s < t; ++s) {
        block[s] = m[v][perm[s]];
        block[t + s] = m[perm[s]][v];
      }
      int cmp = 0;  // block vs best at this offset
      if (have_best) {
        for (int s = 0; s < 2 * t && cmp == 0; ++s) {
          if (block[s] < best[offset + s]) cmp = -1;
          if (block[s] > best[offset + s]) cmp = 1;
        }
        if (cmp > 0) continue;
      }
      if (cmp < 0 || !have_best) {
        std::copy(block.begin(), block.end(), best.begin() + offset);
        if (have_best)  // invalidate the old tail
          std::fill(best.begin() + offset + 2 * t, best.end(), 0x7fffffff);
      }
      perm.push_back(v);
      used[v] = true;
      rec(t + 1, offset + 2 * t);
      used[v] = false;
      perm.pop_back();
    }
  }
};

std::vector<std::vector<int>> permuted(const std::vector<std::vector<int>>& m,
                                       const std::vector<int>& perm) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m[perm[i]][perm[j]];
  return out;
}

}  // namespace

Quiver CanonicalQuiver::quiver() const {
  std::vector<std::string> names;
  for (size_t i = 0; i < matrix.size(); ++i)
    names.push_back(std::to_string(i + 1));
  return Quiver(std::move(names), matrix);
}

CanonicalQuiver canonical_form(const Quiver& q) {
  CanonSearch search(q.matrix());
  search.run();
  CanonicalQuiver out;
  out.perm = search.best_perm;
  out.matrix = permuted(q.matrix(), out.perm);
  return out;
}

MutationClass enumerate_mutation_class(const Quiver& q, std::size_t limit) {
  if (limit == 0) throw error("class limit must be positive");
  MutationClass result;
  std::set<std::vector<std::vector<int>>> seen;
  std::deque<Quiver> frontier;

  auto c0 = canonical_form(q);
  seen.insert(c0.matrix);
  result.classes.push_back(std::move(c0));
  frontier.push_back(q);

  while (!frontier.empty()) {
    const Quiver cur = std::move(frontier.front());
    frontier.pop_front();
    for (int k = 0; k < q.size(); ++k) {
      Quiver next = mutate(cur, k);
      auto c = canonical_form(next);
      if (seen.count(c.matrix)) continue;
      if (seen.size() >= limit) {
        result.complete = false;
        std::sort(result.classes.begin(), result.classes.end());
        return result;
      }
      seen.insert(c.matrix);
      result.classes.push_back(std::move(c));
      frontier.push_back(std::move(next));
    }
  }
  result.complete = true;
  std::sort(result.classes.begin(), result.classes.end());
  return result;
}

namespace {

bool has_heavy_arrow(const Quiver& q) {
  for (const auto& row : q.matrix())
    for (int x : row)
      if (x > 1 || x < -1) return true;
  return false;
}

std::vector<DynkinType> classify_components(const Quiver& q) {
  std::vector<DynkinType> types;
  for (const auto& comp : connected_components(q)) {
    const auto sub = induced_subquiver(q, comp);
    const auto t = classify_graph(underlying_graph(sub));
    if (!t) throw error("acyclic representative is not a Dynkin orientation");
    types.push_back(*t);
  }
  return types;
}

}  // namespace

TypeResult is_finite_type(const Quiver& q) {
  TypeResult res;
  if (q.size() == 0) {
    res.finite = true;
    res.witness = q;
    return res;
  }
  if (has_heavy_arrow(q)) {
    res.finite = false;
    res.witness = q;
    return res;
  }

  struct Node {
    Quiver labeled;
    std::vector<std::string> path;
  };
  std::set<std::vector<std::vector<int>>> seen;
  std::deque<Node> frontier;
  seen.insert(canonical_form(q).matrix);
  frontier.push_back({q, {}});

  std::optional<Node> acyclic;
  if (q.is_acyclic()) acyclic = Node{q, {}};

  while (!frontier.empty()) {
    Node cur = std::move(frontier.front());
    frontier.pop_front();
    for (int k = 0; k < q.size(); ++k) {
      Quiver next = mutate(cur.labeled, k);
      auto path = cur.path;
      path.push_back(cur.labeled.vertex(k));
      if (has_heavy_arrow(next)) {
        res.finite = false;
        res.witness = std::move(next);
        res.path = std::move(path);
        return res;
      }
      auto c = canonical_form(next);
      if (seen.count(c.matrix)) continue;
      seen.insert(std::move(c.matrix));
      if (!acyclic && next.is_acyclic()) acyclic = Node{next, path};
      frontier.push_back({std::move(next), std::move(path)});
    }
  }

  res.finite = true;
  if (!acyclic) throw error("finite class without acyclic member");
  res.witness = std::move(acyclic->labeled);
  res.path = std::move(acyclic->path);
  res.types = classify_components(res.witness);
  return res;
}

std::optional<Quiver> acyclic_representative(const Quiver& q,
                                             std::size_t limit) {
  if (q.is_acyclic()) return q;
  std::set<std::vector<std::vector<int>>> seen;
  std::deque<Quiver> frontier;
  seen.insert(canonical_form(q).matrix);
  frontier.push_back(q);
  while (!frontier.empty()) {
    const Quiver cur = std::move(frontier.front());
    frontier.pop_front();
    for (int k = 0; k < q.size(); ++k) {
      Quiver next = mutate(cur, k);
      auto c = canonical_form(next);
      if (seen.count(c.matrix)) continue;
      if (seen.size() >= limit) throw error("class limit exceeded");
      seen.insert(std::move(c.matrix));
      if (next.is_acyclic()) return next;
      frontier.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace qv
