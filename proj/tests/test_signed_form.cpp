#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "qv/unit_form.hpp"

using namespace qv;

namespace {

SignedGraph graph(std::vector<std::string> vs,
                  std::vector<std::tuple<int, int, EdgeSign, int>> es) {
  std::vector<SignedEdge> edges;
  for (const auto& [u, v, s, m] : es) edges.push_back({u, v, s, m});
  return SignedGraph(std::move(vs), std::move(edges));
}

// path diagram form: solid edges along 1-2-...-n
UnitForm path_form(int n) {
  std::vector<SignedEdge> edges;
  for (int t = 0; t + 1 < n; ++t)
    edges.push_back({t, t + 1, EdgeSign::solid, 1});
  return form_from_signed_graph(SignedGraph(qvtest::labels(n), edges));
}

// brute-force definiteness: evaluate over an integer box and collect the
// kernel directions seen there
Definiteness box_oracle(const UnitForm& f, long long radius = 4) {
  const int n = f.size();
  std::vector<long long> x(n, -radius);
  std::vector<std::vector<long long>> zeros;
  bool negative = false;
  while (true) {
    bool all_zero = std::all_of(x.begin(), x.end(),
                                [](long long v) { return v == 0; });
    if (!all_zero) {
      const long long v = f.evaluate(x);
      if (v < 0) negative = true;
      if (v == 0) zeros.push_back(x);
    }
    int i = n - 1;
    while (i >= 0 && x[i] == radius) x[i--] = -radius;
    if (i < 0) break;
    ++x[i];
  }
  if (negative) return {Definiteness::indefinite, 0};
  if (zeros.empty()) return {Definiteness::positive_definite, 0};
  // rank of the zero set by rational elimination
  std::vector<std::vector<double>> basis;
  int rank = 0;
  for (auto z : zeros) {
    std::vector<double> v(z.begin(), z.end());
    for (const auto& b : basis) {
      double dot = 0, nb = 0;
      for (int t = 0; t < n; ++t) {
        dot += v[t] * b[t];
        nb += b[t] * b[t];
      }
      for (int t = 0; t < n; ++t) v[t] -= dot / nb * b[t];
    }
    double norm = 0;
    for (double c : v) norm += c * c;
    if (norm > 1e-6) {
      basis.push_back(v);
      ++rank;
    }
  }
  return {Definiteness::positive_semidefinite, rank};
}

SignedGraph random_signed_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::vector<SignedEdge> edges;
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < p)
        edges.push_back({i, j,
                         u(rng) < 0.5 ? EdgeSign::solid : EdgeSign::dotted, 1});
  return SignedGraph(qvtest::labels(n), std::move(edges));
}

std::vector<long long> flip_coord(std::vector<long long> x, int i) {
  x[i] = -x[i];
  return x;
}

}  // namespace

TEST_CASE("signed graph <-> unit form") {
  const auto solid = graph({"1", "2"}, {{0, 1, EdgeSign::solid, 1}});
  const auto dotted = graph({"1", "2"}, {{0, 1, EdgeSign::dotted, 1}});
  CHECK(form_from_signed_graph(solid).coefficient(0, 1) == -1);
  CHECK(form_from_signed_graph(dotted).coefficient(0, 1) == 1);
  const auto kron = graph({"1", "2"}, {{0, 1, EdgeSign::solid, 2}});
  CHECK(form_from_signed_graph(kron).coefficient(0, 1) == -2);

  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    const auto g = random_signed_graph(rng, 2 + static_cast<int>(rng() % 6));
    const auto f = form_from_signed_graph(g);
    CHECK(form_from_signed_graph(signed_graph_of(f)) == f);
    CHECK(signed_graph_of(f) == g);  // g carries one sign per pair
  }
}

TEST_CASE("evaluate") {
  const auto a1t = form_from_signed_graph(
      graph({"1", "2"}, {{0, 1, EdgeSign::solid, 2}}));
  CHECK(a1t.evaluate({1, 1}) == 0);
  CHECK(path_form(2).evaluate({1, 1}) == 1);
  CHECK_THROWS_AS(path_form(2).evaluate({1, 1, 1}), error);
}

TEST_CASE("definiteness on the classical forms") {
  for (int n = 1; n <= 6; ++n)
    CHECK(definiteness(path_form(n)).kind == Definiteness::positive_definite);

  const auto star = form_from_signed_graph(graph(
      {"c", "1", "2", "3", "4"}, {{0, 1, EdgeSign::solid, 1},
                                  {0, 2, EdgeSign::solid, 1},
                                  {0, 3, EdgeSign::solid, 1},
                                  {0, 4, EdgeSign::solid, 1}}));
  CHECK(definiteness(star) ==
        Definiteness{Definiteness::positive_semidefinite, 1});

  const auto wild = form_from_signed_graph(
      graph({"1", "2"}, {{0, 1, EdgeSign::solid, 3}}));
  CHECK(definiteness(wild).kind == Definiteness::indefinite);
  CHECK(wild.evaluate({1, 1}) == -1);
}

TEST_CASE("definiteness agrees with the box-search oracle") {
  const auto agree = [](const UnitForm& f) {
    const auto got = definiteness(f);
    const auto expect = box_oracle(f);
    CHECK(got.kind == expect.kind);
    if (got.kind == Definiteness::positive_semidefinite)
      CHECK(got.corank == expect.corank);
  };

  // exhaustive over every coefficient matrix with |a_ij| <= 2, n <= 3
  for (int n = 2; n <= 3; ++n) {
    const int pairs = n * (n - 1) / 2;
    int combos = 1;
    for (int t = 0; t < pairs; ++t) combos *= 5;
    for (int code = 0; code < combos; ++code) {
      std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
      int rest = code;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          a[i][j] = a[j][i] = rest % 5 - 2;
          rest /= 5;
        }
      agree(UnitForm(qvtest::labels(n), a));
    }
  }

  // sampled at n = 4, 5
  std::mt19937 rng(17);
  for (int it = 0; it < 150; ++it) {
    const int n = 4 + static_cast<int>(rng() % 2);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        a[i][j] = a[j][i] = static_cast<int>(rng() % 5) - 2;
    agree(UnitForm(qvtest::labels(n), a));
  }
}

TEST_CASE("radical vectors") {
  const auto a1t = form_from_signed_graph(
      graph({"1", "2"}, {{0, 1, EdgeSign::solid, 2}}));
  CHECK(radical_vector(a1t).z == std::vector<long long>{1, 1});

  const auto star = form_from_signed_graph(graph(
      {"c", "1", "2", "3", "4"}, {{0, 1, EdgeSign::solid, 1},
                                  {0, 2, EdgeSign::solid, 1},
                                  {0, 3, EdgeSign::solid, 1},
                                  {0, 4, EdgeSign::solid, 1}}));
  const auto r = radical_vector(star);
  CHECK(r.z == std::vector<long long>{2, 1, 1, 1, 1});
  CHECK(r.positive);
  CHECK(r.sincere);

  CHECK_THROWS_AS(radical_vector(path_form(3)), error);  // positive definite
  const auto wild = form_from_signed_graph(
      graph({"1", "2"}, {{0, 1, EdgeSign::solid, 3}}));
  CHECK_THROWS_AS(radical_vector(wild), error);
}

TEST_CASE("sign change toggles exactly the incident edges and is an involution") {
  const auto g = graph({"1", "2"}, {{0, 1, EdgeSign::solid, 1}});
  CHECK(sign_change(g, 0).edges()[0].sign == EdgeSign::dotted);
  CHECK(sign_change(sign_change(g, 0), 0) == g);

  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto h = random_signed_graph(rng, n);
    const int k = static_cast<int>(rng() % n);
    const auto h2 = sign_change(h, k);
    CHECK(sign_change(h2, k) == h);
    for (const auto& e : h.edges()) {
      const bool incident = e.u == k || e.v == k;
      const auto after = h2.multiplicity(e.u, e.v, e.sign);
      if (incident)
        CHECK(after == 0);
      else
        CHECK(after == e.mult);
    }
  }
  CHECK_THROWS_AS(sign_change(g, 5), error);
}

TEST_CASE("parity of dotted edges per cycle is preserved by sign changes") {
  std::mt19937 rng(29);
  int cycles_seen = 0;
  for (int it = 0; it < 400; ++it) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto g = random_signed_graph(rng, n, 0.45);
    const auto cycles = full_cycles(g);
    if (cycles.empty()) continue;
    cycles_seen += static_cast<int>(cycles.size());
    const auto before = parity_profile(g, cycles);
    for (int k = 0; k < n; ++k)
      CHECK(parity_profile(sign_change(g, k), cycles) == before);
  }
  CHECK(cycles_seen > 100);  // the sample actually exercised cycles
}

TEST_CASE("parity profile of the 8-vertex example") {
  const auto q = qvtest::twin_triangles();
  const auto cycles = full_cycles(q);
  const auto splus = underlying_graph(
      q, {{q.index_of("g"), q.index_of("b")}});
  CHECK(parity_profile(splus, cycles) == std::vector<int>{1, 1});
  const auto all_solid = underlying_graph(q);
  CHECK(parity_profile(all_solid, cycles) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(
      parity_profile(splus, {Cycle{{0, 1}, false}}), error);
}

TEST_CASE("sign change is the isometry x_k -> -x_k") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long long> coord(-4, 4);
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto g = random_signed_graph(rng, n);
    const int k = static_cast<int>(rng() % n);
    const auto f = form_from_signed_graph(g);
    const auto fk = form_from_signed_graph(sign_change(g, k));
    std::vector<long long> x(n);
    for (auto& v : x) v = coord(rng);
    CHECK(fk.evaluate(flip_coord(x, k)) == f.evaluate(x));
  }
}

TEST_CASE("radical coordinate negates under a sign change") {
  // corank-1 instances: sign-changed star diagrams
  std::mt19937 rng(37);
  for (int it = 0; it < 100; ++it) {
    auto g = graph({"c", "1", "2", "3", "4"}, {{0, 1, EdgeSign::solid, 1},
                                               {0, 2, EdgeSign::solid, 1},
                                               {0, 3, EdgeSign::solid, 1},
                                               {0, 4, EdgeSign::solid, 1}});
    for (int t = 0; t < 3; ++t) g = sign_change(g, static_cast<int>(rng() % 5));
    const int k = static_cast<int>(rng() % 5);
    const auto r = radical_vector(form_from_signed_graph(g));
    const auto rk = radical_vector(form_from_signed_graph(sign_change(g, k)));
    auto expect = flip_coord(r.z, k);
    // compare up to the sign normalization
    auto neg = expect;
    for (auto& v : neg) v = -v;
    CHECK((rk.z == expect || rk.z == neg));
  }
}

TEST_CASE("a positive definite form has an odd number of dotted edges on "
          "every full cycle") {
  for (int n = 3; n <= 6; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<SignedEdge> edges;
      for (int t = 0; t < n; ++t)
        edges.push_back({std::min(t, (t + 1) % n), std::max(t, (t + 1) % n),
                         (mask >> t & 1) ? EdgeSign::dotted : EdgeSign::solid,
                         1});
      const SignedGraph g(qvtest::labels(n), edges);
      const auto f = form_from_signed_graph(g);
      if (definiteness(f).kind != Definiteness::positive_definite) continue;
      CHECK(parity_profile(g, full_cycles(g)) == std::vector<int>{1});
    }
  }
}

TEST_CASE("find_sign_change_set") {
  const auto q = qvtest::twin_triangles();
  const int b = q.index_of("b"), d = q.index_of("d"), e = q.index_of("e"),
            g = q.index_of("g"), h = q.index_of("h");

  SUBCASE("the two admissible signings of the 8-vertex example differ by {g,h}") {
    const auto s_plus = underlying_graph(q, {{g, b}});
    const auto s_prime = underlying_graph(q, qv::normalized({{d, g}, {e, g}}));
    const auto u = find_sign_change_set(s_plus, s_prime);
    REQUIRE(u.has_value());
    CHECK(*u == std::vector<int>{g, h});
  }
  SUBCASE("identical graphs need no changes") {
    const auto s = underlying_graph(q);
    CHECK(find_sign_change_set(s, s) == std::vector<int>{});
  }
  SUBCASE("solid vs dotted single edge: one endpoint") {
    const auto s = graph({"1", "2"}, {{0, 1, EdgeSign::solid, 1}});
    const auto t = graph({"1", "2"}, {{0, 1, EdgeSign::dotted, 1}});
    CHECK(find_sign_change_set(s, t) == std::vector<int>{0});
  }
  SUBCASE("unsolvable: even cycle parity cannot change") {
    const auto c4 = graph({"1", "2", "3", "4"}, {{0, 1, EdgeSign::solid, 1},
                                                 {1, 2, EdgeSign::solid, 1},
                                                 {2, 3, EdgeSign::solid, 1},
                                                 {0, 3, EdgeSign::solid, 1}});
    auto c4_odd = graph({"1", "2", "3", "4"}, {{0, 1, EdgeSign::dotted, 1},
                                               {1, 2, EdgeSign::solid, 1},
                                               {2, 3, EdgeSign::solid, 1},
                                               {0, 3, EdgeSign::solid, 1}});
    CHECK_FALSE(find_sign_change_set(c4, c4_odd).has_value());
  }
  SUBCASE("mismatched underlying graphs are an error") {
    const auto s = graph({"1", "2"}, {{0, 1, EdgeSign::solid, 1}});
    const auto t = graph({"1", "2"}, {{0, 1, EdgeSign::solid, 2}});
    CHECK_THROWS_AS(find_sign_change_set(s, t), error);
  }
  SUBCASE("applying the returned set transforms g1 into g2") {
    std::mt19937 rng(41);
    for (int it = 0; it < 200; ++it) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const auto g1 = random_signed_graph(rng, n, 0.6);
      auto g2 = g1;
      std::set<int> flips;
      for (int t = 0; t < n / 2; ++t) flips.insert(static_cast<int>(rng() % n));
      for (int v : flips) g2 = sign_change(g2, v);
      const auto u = find_sign_change_set(g1, g2);
      REQUIRE(u.has_value());
      auto g3 = g1;
      for (int v : *u) g3 = sign_change(g3, v);
      CHECK(g3 == g2);
      CHECK(u->size() < static_cast<size_t>(n));
    }
  }
}

TEST_CASE("positive_roots") {
  const auto a2 = path_form(2);
  CHECK(positive_roots(a2, 1) ==
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots(path_form(3), 1).size() == 6);

  const auto a1t = form_from_signed_graph(
      graph({"1", "2"}, {{0, 1, EdgeSign::solid, 2}}));
  CHECK(positive_roots(a1t, 2) ==
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(positive_roots(a1t, 3) ==
        std::vector<std::vector<long long>>{
            {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
  CHECK_THROWS_AS(positive_roots(a2, 0), error);
}
