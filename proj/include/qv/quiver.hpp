#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qv {

// Domain error: raised by operations on invalid inputs (unknown vertex,
// violated precondition, infeasible system, ...).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input (quiver / signed graph / presentation files).
struct parse_error : error {
  using error::error;
};

// An arrow src -> dst, by vertex index.
struct Arrow {
  int src = 0;
  int dst = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// A set of arrows of some quiver, kept sorted and unique.
using ArrowSet = std::vector<Arrow>;

ArrowSet normalized(ArrowSet s);

// Cluster quiver: named vertices plus a skew-symmetric integer exchange
// matrix.  entry(i,j) > 0 means entry(i,j) arrows from vertex i to vertex j.
// Invariants enforced on construction: skew-symmetry, zero diagonal,
// unique vertex labels.  Values are immutable; all operations are pure.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices,
         std::vector<std::vector<int>> matrix);

  // arrows given as (src label, dst label, multiplicity); rejects loops and
  // explicitly declared 2-cycles.
  static Quiver from_arrows(
      std::vector<std::string> vertices,
      const std::vector<std::tuple<std::string, std::string, int>>& arrows);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(int i) const { return vertices_.at(i); }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[i][j]; }

  // index of a label; throws qv::error for unknown labels
  int index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const;

  // one entry per ordered pair with entry > 0 (multiplicity via entry()),
  // sorted by (src, dst)
  std::vector<Arrow> arrows() const;
  int arrow_count() const;  // counts multiplicity
  bool simply_laced() const;

  bool is_acyclic() const;  // no directed cycles

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> matrix_;
};

// Fomin-Zelevinsky matrix mutation at vertex k.  An involution.
Quiver mutate(const Quiver& q, int k);
Quiver mutate(const Quiver& q, const std::string& vertex);

// induced subquiver on all vertices but k
Quiver delete_vertex(const Quiver& q, int k);
Quiver delete_vertex(const Quiver& q, const std::string& vertex);

// induced subquiver on a sorted list of vertex indices
Quiver induced_subquiver(const Quiver& q, const std::vector<int>& keep);

// connected components of the underlying graph, each a sorted index list,
// ordered by smallest member
std::vector<std::vector<int>> connected_components(const Quiver& q);

// A chordless cycle of the underlying graph.  `vertices` is the cyclic
// order, starting at the smallest index; for oriented cycles it follows the
// arrows.
struct Cycle {
  std::vector<int> vertices;
  bool oriented = false;

  int length() const { return static_cast<int>(vertices.size()); }
};

// All chordless ("full") cycles of the underlying graph, each flagged
// oriented or not, ordered lexicographically by sorted vertex set.
// Requires a simply-laced quiver; throws qv::error otherwise.
std::vector<Cycle> full_cycles(const Quiver& q);

// directed path existence from -> to (used for oriented-cycle membership)
bool has_directed_path(const Quiver& q, int from, int to);

}  // namespace qv
