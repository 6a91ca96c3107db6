#include "qv/minimal_infinite.hpp"

#include "qv/signed_graph.hpp"

namespace qv {

MinimalInfiniteResult is_minimal_infinite(const Quiver& q) {
  if (connected_components(q).size() != 1)
    throw error("disconnected input");

  MinimalInfiniteResult res;
  res.whole = is_finite_type(q);
  if (res.whole.finite) return res;  // finite type, Dynkin certificate

  for (int k = 0; k < q.size(); ++k) {
    const Quiver del = delete_vertex(q, k);
    std::vector<DynkinType> types;
    for (const auto& comp : connected_components(del)) {
      const auto sub = induced_subquiver(del, comp);
      auto t = is_finite_type(sub);
      if (!t.finite) {
        res.witness_vertex = q.vertex(k);
        return res;
      }
      types.insert(types.end(), t.types.begin(), t.types.end());
    }
    res.deletions.emplace_back(q.vertex(k), std::move(types));
  }
  res.minimal_infinite = true;
  return res;
}

StructureReport check_structure(const Quiver& q) {
  const auto mi = is_minimal_infinite(q);
  if (!mi.minimal_infinite) throw error("quiver is not minimal infinite");

  StructureReport rep;
  rep.ok = true;
  const int n = q.size();

  if (n >= 3 && !q.simply_laced()) {
    rep.ok = false;
    rep.violations.push_back("double arrow in a quiver with >= 3 vertices");
    return rep;
  }

  if (n == 2) return rep;  // generalized Kronecker regime

  const auto type = classify_graph(underlying_graph(q));
  if (type && type->family == DynkinType::A_tilde) {
    rep.cycle_graph = true;
    const auto cycles = full_cycles(q);
    if (cycles.size() != 1 || cycles.front().oriented) {
      rep.ok = false;
      rep.violations.push_back("cycle-shaped quiver must be non-oriented");
    } else {
      rep.cycle_arms = cycle_orientation_arms(q);
    }
    return rep;
  }

  for (const auto& c : full_cycles(q)) {
    if (c.oriented) continue;
    rep.ok = false;
    std::string desc = "non-oriented full cycle (";
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      if (i) desc += ",";
      desc += q.vertex(c.vertices[i]);
    }
    desc += ")";
    rep.violations.push_back(std::move(desc));
  }
  return rep;
}

}  // namespace qv
