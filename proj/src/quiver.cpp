#include "qv/quiver.hpp"

#include <algorithm>
#include <set>

namespace qv {

ArrowSet normalized(ArrowSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::vector<int>> matrix)
    : vertices_(std::move(vertices)), matrix_(std::move(matrix)) {
  const auto n = vertices_.size();
  if (matrix_.size() != n)
    throw error("matrix size does not match vertex count");
  for (const auto& row : matrix_)
    if (row.size() != n) throw error("matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (matrix_[i][i] != 0) throw error("loop at vertex " + vertices_[i]);
    for (size_t j = 0; j < n; ++j)
      if (matrix_[i][j] != -matrix_[j][i])
        throw error("matrix is not skew-symmetric");
  }
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw error("duplicate vertex label: " + v);
}

Quiver Quiver::from_arrows(
    std::vector<std::string> vertices,
    const std::vector<std::tuple<std::string, std::string, int>>& arrows) {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  Quiver shell(std::move(vertices), std::move(m));  // validates labels
  auto mat = shell.matrix_;
  std::set<std::pair<int, int>> declared;
  for (const auto& [s, d, mult] : arrows) {
    const int i = shell.index_of(s);
    const int j = shell.index_of(d);
    if (i == j) throw error("loop at vertex " + s);
    if (mult < 1) throw error("arrow multiplicity must be >= 1");
    if (declared.count({j, i}))
      throw error("2-cycle between " + s + " and " + d);
    declared.insert({i, j});
    mat[i][j] += mult;
    mat[j][i] -= mult;
  }
  return Quiver(std::move(shell.vertices_), std::move(mat));
}

int Quiver::index_of(const std::string& label) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return static_cast<int>(i);
  throw error("unknown vertex: " + label);
}

bool Quiver::has_vertex(const std::string& label) const {
  return std::find(vertices_.begin(), vertices_.end(), label) !=
         vertices_.end();
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (matrix_[i][j] > 0) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

int Quiver::arrow_count() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (matrix_[i][j] > 0) c += matrix_[i][j];
  return c;
}

bool Quiver::simply_laced() const {
  for (const auto& row : matrix_)
    for (int x : row)
      if (x > 1 || x < -1) return false;
  return true;
}

bool Quiver::is_acyclic() const {
  // Kahn peeling
  const int n = size();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (matrix_[i][j] > 0) ++indeg[j];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int removed = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int j = 0; j < n; ++j)
      if (matrix_[v][j] > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  return removed == n;
}

namespace {
int sgn(int x) { return (x > 0) - (x < 0); }
}  // namespace

Quiver mutate(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 0 || k >= n) throw error("mutation vertex out of range");
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        b[i][j] = -q.entry(i, j);
      else
        b[i][j] = q.entry(i, j) +
                  sgn(q.entry(i, k)) * std::max(q.entry(i, k) * q.entry(k, j), 0);
    }
  return Quiver(q.vertices(), std::move(b));
}

Quiver mutate(const Quiver& q, const std::string& vertex) {
  return mutate(q, q.index_of(vertex));
}

Quiver induced_subquiver(const Quiver& q, const std::vector<int>& keep) {
  std::vector<std::string> vs;
  vs.reserve(keep.size());
  for (int i : keep) vs.push_back(q.vertex(i));
  std::vector<std::vector<int>> m(keep.size(),
                                  std::vector<int>(keep.size(), 0));
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      m[a][b] = q.entry(keep[a], keep[b]);
  return Quiver(std::move(vs), std::move(m));
}

Quiver delete_vertex(const Quiver& q, int k) {
  if (k < 0 || k >= q.size()) throw error("vertex out of range");
  std::vector<int> keep;
  for (int i = 0; i < q.size(); ++i)
    if (i != k) keep.push_back(i);
  return induced_subquiver(q, keep);
}

Quiver delete_vertex(const Quiver& q, const std::string& vertex) {
  return delete_vertex(q, q.index_of(vertex));
}

std::vector<std::vector<int>> connected_components(const Quiver& q) {
  const int n = q.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < n; ++w)
        if (!seen[w] && q.entry(v, w) != 0) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Chordless cycle enumeration: grow chordless paths from the least vertex of
// the cycle; a path may only close back to its start.  Each cycle is found
// once (the start is its minimum, and the second vertex is kept below the
// last to fix the direction).
void extend_chordless(const std::vector<std::vector<bool>>& adj, int start,
                      std::vector<int>& path, std::vector<bool>& onpath,
                      std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(adj.size());
  const int last = path.back();
  for (int nb = start + 1; nb < n; ++nb) {
    if (!adj[last][nb] || onpath[nb]) continue;
    bool chord = false;
    for (size_t t = 1; t + 1 < path.size(); ++t)
      if (adj[path[t]][nb]) {
        chord = true;
        break;
      }
    if (chord) continue;
    if (adj[start][nb] && path.size() >= 2) {
      if (path[1] < nb) {
        auto cyc = path;
        cyc.push_back(nb);
        out.push_back(std::move(cyc));
      }
    } else if (path.size() == 1 || !adj[start][nb]) {
      path.push_back(nb);
      onpath[nb] = true;
      extend_chordless(adj, start, path, onpath, out);
      onpath[nb] = false;
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<Cycle> full_cycles(const Quiver& q) {
  if (!q.simply_laced()) throw error("multiple arrows present");
  const int n = q.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.entry(i, j) != 0) adj[i][j] = true;

  std::vector<std::vector<int>> raw;
  for (int s = 0; s < n; ++s) {
    std::vector<int> path{s};
    std::vector<bool> onpath(n, false);
    onpath[s] = true;
    extend_chordless(adj, s, path, onpath, raw);
  }

  std::vector<Cycle> cycles;
  for (auto& vs : raw) {
    const int len = static_cast<int>(vs.size());
    bool fwd = true, bwd = true;
    for (int t = 0; t < len; ++t) {
      const int a = vs[t], b = vs[(t + 1) % len];
      if (q.entry(a, b) <= 0) fwd = false;
      if (q.entry(b, a) <= 0) bwd = false;
    }
    Cycle c;
    c.oriented = fwd || bwd;
    if (bwd && !fwd) {
      // store in arrow direction
      std::reverse(vs.begin() + 1, vs.end());
    }
    c.vertices = std::move(vs);
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              auto sa = a.vertices, sb = b.vertices;
              std::sort(sa.begin(), sa.end());
              std::sort(sb.begin(), sb.end());
              return sa < sb;
            });
  return cycles;
}

bool has_directed_path(const Quiver& q, int from, int to) {
  const int n = q.size();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w = 0; w < n; ++w)
      if (q.entry(v, w) > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace qv
