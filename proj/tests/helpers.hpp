#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "qv/quiver.hpp"

namespace qvtest {

using A = std::tuple<std::string, std::string, int>;

inline qv::Quiver make(std::vector<std::string> vs, std::vector<A> arrows) {
  return qv::Quiver::from_arrows(std::move(vs), arrows);
}

inline std::vector<std::string> labels(int n) {
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  return vs;
}

// orientation of the A_n diagram: bit t set = arrow t+1 -> t+2
inline qv::Quiver path_quiver(int n, unsigned mask) {
  std::vector<A> arrows;
  for (int t = 0; t < n - 1; ++t) {
    auto u = std::to_string(t + 1), v = std::to_string(t + 2);
    if (mask >> t & 1)
      arrows.push_back({u, v, 1});
    else
      arrows.push_back({v, u, 1});
  }
  return make(labels(n), arrows);
}

// orientation of the n-cycle: bit t set = arrow t+1 -> t+2 (cyclically)
inline qv::Quiver cycle_quiver(int n, unsigned mask) {
  std::vector<A> arrows;
  for (int t = 0; t < n; ++t) {
    auto u = std::to_string(t + 1), v = std::to_string((t + 1) % n + 1);
    if (mask >> t & 1)
      arrows.push_back({u, v, 1});
    else
      arrows.push_back({v, u, 1});
  }
  return make(labels(n), arrows);
}

// star orientation of the D~4 diagram, all leaves pointing inward
inline qv::Quiver dtilde4_star() {
  return make({"c", "1", "2", "3", "4"},
              {{"1", "c", 1}, {"2", "c", 1}, {"3", "c", 1}, {"4", "c", 1}});
}

// tree orientation of the D~n diagram (n >= 5): forks at both ends
inline qv::Quiver dtilde_tree(int rank) {
  std::vector<std::string> vs = {"l1", "l2"};
  const int path_len = rank - 3;  // inner path vertices
  for (int i = 1; i <= path_len; ++i) vs.push_back("m" + std::to_string(i));
  vs.push_back("r1");
  vs.push_back("r2");
  std::vector<A> arrows = {{"l1", "m1", 1}, {"l2", "m1", 1}};
  for (int i = 1; i < path_len; ++i)
    arrows.push_back({"m" + std::to_string(i), "m" + std::to_string(i + 1), 1});
  arrows.push_back({"m" + std::to_string(path_len), "r1", 1});
  arrows.push_back({"m" + std::to_string(path_len), "r2", 1});
  return make(std::move(vs), arrows);
}

// the 8-vertex minimal infinite quiver used across the examples: two
// oriented triangles (b,d,g), (b,e,g) glued along g->b, pendant chain
// f->c->d, pendants a->b and h->g
inline qv::Quiver twin_triangles() {
  return make({"a", "b", "c", "d", "e", "f", "g", "h"},
              {{"a", "b", 1},
               {"f", "c", 1},
               {"c", "d", 1},
               {"b", "d", 1},
               {"b", "e", 1},
               {"d", "g", 1},
               {"e", "g", 1},
               {"g", "b", 1},
               {"h", "g", 1}});
}

// three parallel length-2 paths a -> x_i -> b plus the return arrow b -> a
inline qv::Quiver star_three_arms() {
  return make({"a", "x1", "x2", "x3", "b"},
              {{"a", "x1", 1}, {"x1", "b", 1}, {"a", "x2", 1}, {"x2", "b", 1},
               {"a", "x3", 1}, {"x3", "b", 1}, {"b", "a", 1}});
}

// star-shaped tree: arms of the given lengths hanging off a center, arrows
// pointing away from it
inline qv::Quiver star_quiver(const std::vector<int>& arms) {
  std::vector<std::string> vs{"c"};
  std::vector<A> arrows;
  int id = 0;
  for (int len : arms) {
    std::string prev = "c";
    for (int t = 0; t < len; ++t) {
      const auto v = "v" + std::to_string(++id);
      vs.push_back(v);
      arrows.push_back({prev, v, 1});
      prev = v;
    }
  }
  return make(vs, arrows);
}

// random exchange matrix, entries in [-2, 2]
inline qv::Quiver random_quiver(std::mt19937& rng, int n, int max_entry = 2) {
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int b = entry(rng);
      m[i][j] = b;
      m[j][i] = -b;
    }
  return qv::Quiver(labels(n), std::move(m));
}

}  // namespace qvtest
