#include "qv/splus.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "qv/minimal_infinite.hpp"
#include "qv/signed_graph.hpp"

namespace qv {

namespace {

// full oriented cycles; a two-vertex quiver has none regardless of arrow
// multiplicities
std::vector<Cycle> oriented_full_cycles(const Quiver& q) {
  if (q.size() <= 2) return {};
  std::vector<Cycle> out;
  for (auto& c : full_cycles(q))
    if (c.oriented) out.push_back(std::move(c));
  return out;
}

struct CycleSystem {
  std::vector<Arrow> variables;          // sorted
  std::vector<std::uint64_t> cycle_rows;  // arrow-membership mask per cycle
};

CycleSystem cycle_system(const Quiver& q) {
  CycleSystem sys;
  std::set<Arrow> vars;
  std::vector<std::vector<Arrow>> cycles;
  for (const auto& c : oriented_full_cycles(q)) {
    std::vector<Arrow> arrows;
    for (int t = 0; t < c.length(); ++t)
      arrows.push_back({c.vertices[t], c.vertices[(t + 1) % c.length()]});
    for (const auto& a : arrows) vars.insert(a);
    cycles.push_back(std::move(arrows));
  }
  sys.variables.assign(vars.begin(), vars.end());
  if (sys.variables.size() > 64)
    throw error("too many arrows on oriented cycles");
  const auto index_of = [&](const Arrow& a) {
    return std::lower_bound(sys.variables.begin(), sys.variables.end(), a) -
           sys.variables.begin();
  };
  for (const auto& arrows : cycles) {
    std::uint64_t row = 0;
    for (const auto& a : arrows) row |= std::uint64_t{1} << index_of(a);
    sys.cycle_rows.push_back(row);
  }
  return sys;
}

ArrowSet mask_to_set(std::uint64_t mask, const std::vector<Arrow>& vars) {
  ArrowSet s;
  for (size_t i = 0; i < vars.size(); ++i)
    if (mask >> i & 1) s.push_back(vars[i]);
  return s;
}

// lexicographic comparison of supports as sorted index lists
bool support_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int ia = __builtin_ctzll(a), ib = __builtin_ctzll(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

OddSets odd_sets(const Quiver& q, std::size_t cap) {
  const auto sys = cycle_system(q);
  const int nvars = static_cast<int>(sys.variables.size());

  // GF(2) elimination on rows (mask | rhs), rhs = 1 for every cycle
  struct Row {
    std::uint64_t mask;
    int rhs;
  };
  std::vector<Row> rows;
  for (auto m : sys.cycle_rows) rows.push_back({m, 1});

  std::vector<int> pivot_of_col(nvars, -1);
  int rank = 0;
  for (int col = 0; col < nvars; ++col) {
    int pr = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r].mask >> col & 1) {
        pr = static_cast<int>(r);
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && (rows[r].mask >> col & 1)) {
        rows[r].mask ^= rows[rank].mask;
        rows[r].rhs ^= rows[rank].rhs;
      }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r)
    if (rows[r].rhs) throw error("odd-set system is infeasible");

  std::uint64_t particular = 0;
  for (int col = 0; col < nvars; ++col)
    if (pivot_of_col[col] >= 0 && rows[pivot_of_col[col]].rhs)
      particular |= std::uint64_t{1} << col;

  std::vector<std::uint64_t> kernel;
  for (int col = 0; col < nvars; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::uint64_t v = std::uint64_t{1} << col;
    for (int c = 0; c < nvars; ++c)
      if (pivot_of_col[c] >= 0 && (rows[pivot_of_col[c]].mask >> col & 1))
        v |= std::uint64_t{1} << c;
    kernel.push_back(v);
  }

  OddSets out;
  out.variables = sys.variables;
  out.dimension = static_cast<int>(kernel.size());

  if (out.dimension < 63 &&
      (std::uint64_t{1} << out.dimension) <= cap) {
    std::uint64_t best = particular;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << out.dimension);
         ++pick) {
      std::uint64_t m = particular;
      for (int b = 0; b < out.dimension; ++b)
        if (pick >> b & 1) m ^= kernel[b];
      masks.push_back(m);
      if (support_less(m, best)) best = m;
    }
    out.enumerated = true;
    out.particular = mask_to_set(best, sys.variables);
    for (auto m : masks) out.all.push_back(mask_to_set(m, sys.variables));
    std::sort(out.all.begin(), out.all.end());
  } else {
    out.enumerated = false;
    out.particular = mask_to_set(particular, sys.variables);
  }
  return out;
}

std::vector<ArrowSet> admissible_sets(const Quiver& q) {
  if (q.size() < 3) throw error("admissible sets need at least 3 vertices");
  if (!is_minimal_infinite(q).minimal_infinite)
    throw error("quiver is not minimal infinite");

  std::vector<std::vector<Arrow>> cycles;
  for (const auto& c : oriented_full_cycles(q)) {
    std::vector<Arrow> arrows;
    for (int t = 0; t < c.length(); ++t)
      arrows.push_back({c.vertices[t], c.vertices[(t + 1) % c.length()]});
    std::sort(arrows.begin(), arrows.end());
    cycles.push_back(std::move(arrows));
  }
  if (cycles.empty()) return {ArrowSet{}};

  std::set<ArrowSet> found;
  ArrowSet chosen;
  const auto valid = [&](const ArrowSet& s) {
    for (const auto& cyc : cycles) {
      int hits = 0;
      for (const auto& a : cyc)
        if (std::binary_search(s.begin(), s.end(), a)) ++hits;
      if (hits != 1) return false;
    }
    return true;
  };
  // one choice per cycle; an arrow on several cycles covers each of them
  const auto rec = [&](auto&& self, size_t t) -> void {
    if (t == cycles.size()) {
      auto s = normalized(chosen);
      if (valid(s)) found.insert(std::move(s));
      return;
    }
    for (const auto& a : cycles[t]) {
      chosen.push_back(a);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return {found.begin(), found.end()};
}

namespace {

void check_odd(const Quiver& q, const ArrowSet& s) {
  const auto sys = cycle_system(q);
  for (const auto& a : s)
    if (!std::binary_search(sys.variables.begin(), sys.variables.end(), a))
      throw error("set contains an arrow on no full oriented cycle");
  for (size_t c = 0; c < sys.cycle_rows.size(); ++c) {
    int hits = 0;
    for (size_t i = 0; i < sys.variables.size(); ++i)
      if ((sys.cycle_rows[c] >> i & 1) &&
          std::binary_search(s.begin(), s.end(), sys.variables[i]))
        ++hits;
    if (hits % 2 == 0) throw error("set is not odd on every oriented cycle");
  }
}

}  // namespace

SplusResult run_splus(const Quiver& q, const ArrowSet& initial_odd) {
  const ArrowSet initial = normalized(initial_odd);
  check_odd(q, initial);

  SplusResult res;
  res.initial = initial;

  const auto sg = underlying_graph(q, initial);
  const auto f = form_from_signed_graph(sg);
  if (definiteness(f).kind != Definiteness::positive_semidefinite)
    throw error("signed form is not positive semidefinite of corank 1; "
                "quiver is not minimal infinite");
  res.initial_radical = radical_vector(f);  // enforces corank 1

  SignedGraph flipped = sg;
  for (int i = 0; i < q.size(); ++i)
    if (res.initial_radical.z[i] < 0) {
      flipped = sign_change(flipped, i);
      res.sign_changes.push_back(q.vertex(i));
    }

  for (const auto& e : flipped.edges())
    if (e.sign == EdgeSign::dotted)
      res.splus.push_back(q.entry(e.u, e.v) > 0 ? Arrow{e.u, e.v}
                                                : Arrow{e.v, e.u});
  res.splus = normalized(res.splus);

  res.radical = radical_vector(form_from_signed_graph(flipped));
  if (!res.radical.positive || !res.radical.sincere)
    throw error("sign changes did not yield a positive sincere radical; "
                "quiver is not minimal infinite");

  // the result must contain exactly one arrow of each full oriented cycle
  for (const auto& c : oriented_full_cycles(q)) {
    int hits = 0;
    for (int t = 0; t < c.length(); ++t) {
      Arrow a{c.vertices[t], c.vertices[(t + 1) % c.length()]};
      if (std::binary_search(res.splus.begin(), res.splus.end(), a)) ++hits;
    }
    if (hits != 1) throw error("resulting set is not admissible");
  }
  return res;
}

SplusResult find_splus(const Quiver& q) {
  return run_splus(q, odd_sets(q).particular);
}

UniquenessReport verify_uniqueness(const Quiver& q, std::size_t cap) {
  UniquenessReport rep;
  const auto type = classify_graph(underlying_graph(q));
  if (type && type->family == DynkinType::A_tilde) {
    rep.a_tilde_skipped = true;  // includes the two-vertex regime
    return rep;
  }

  const auto odd = odd_sets(q, cap);
  if (!odd.enumerated) throw error("odd-set enumeration cap exceeded");
  rep.odd_set_count = static_cast<int>(odd.all.size());

  int positives = 0;
  for (const auto& s : odd.all) {
    const auto f = form_from_signed_graph(underlying_graph(q, s));
    if (definiteness(f).kind != Definiteness::positive_semidefinite)
      throw error("odd set with non-semidefinite form; "
                  "quiver is not minimal infinite");
    const auto rad = radical_vector(f);
    if (rad.positive && rad.sincere) {
      ++positives;
      rep.splus = s;
    } else {
      std::vector<std::string> negs;
      for (int i = 0; i < q.size(); ++i)
        if (rad.z[i] < 0) negs.push_back(q.vertex(i));
      rep.others.emplace_back(s, std::move(negs));
    }
  }
  rep.unique = positives == 1;
  return rep;
}

}  // namespace qv
