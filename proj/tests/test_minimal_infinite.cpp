#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qv/minimal_infinite.hpp"

using namespace qv;
using qvtest::make;

namespace {

// the definition, spelled out directly
bool brute_minimal_infinite(const Quiver& q) {
  if (is_finite_type(q).finite) return false;
  for (int k = 0; k < q.size(); ++k) {
    const auto d = delete_vertex(q, k);
    for (const auto& comp : connected_components(d))
      if (!is_finite_type(induced_subquiver(d, comp)).finite) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generalized Kronecker quivers are minimal infinite") {
  const auto res = is_minimal_infinite(make({"1", "2"}, {{"1", "2", 2}}));
  CHECK(res.minimal_infinite);
  REQUIRE(res.deletions.size() == 2);
}

TEST_CASE("the 8-vertex example is minimal infinite") {
  const auto res = is_minimal_infinite(qvtest::twin_triangles());
  CHECK(res.minimal_infinite);
  CHECK(res.deletions.size() == 8);
  for (const auto& [v, types] : res.deletions)
    for (const auto& t : types) CHECK_FALSE(t.extended());
}

TEST_CASE("a tree properly containing the 5-vertex star is not minimal") {
  const auto q = make({"c", "1", "2", "3", "4", "5"},
                      {{"1", "c", 1}, {"2", "c", 1}, {"3", "c", 1},
                       {"4", "c", 1}, {"5", "1", 1}});
  const auto res = is_minimal_infinite(q);
  CHECK_FALSE(res.minimal_infinite);
  CHECK_FALSE(res.whole.finite);
  REQUIRE(res.witness_vertex.has_value());
  CHECK(*res.witness_vertex == "5");
}

TEST_CASE("finite type inputs report their Dynkin certificate") {
  const auto res = is_minimal_infinite(qvtest::cycle_quiver(4, 0b1111));
  CHECK_FALSE(res.minimal_infinite);
  REQUIRE(res.whole.finite);
  CHECK(res.whole.types[0] == DynkinType{DynkinType::D, 4, {}});
}

TEST_CASE("disconnected input is rejected") {
  CHECK_THROWS_AS(
      is_minimal_infinite(make({"1", "2", "3", "4"},
                               {{"1", "2", 1}, {"3", "4", 1}})),
      error);
}

TEST_CASE("agreement with the brute-force definition over small classes") {
  for (const auto& seed :
       {qvtest::cycle_quiver(3, 0b011), qvtest::dtilde4_star()}) {
    const auto cls = enumerate_mutation_class(seed);
    REQUIRE(cls.complete);
    for (const auto& c : cls.classes) {
      const auto member = c.quiver();
      CHECK(is_minimal_infinite(member).minimal_infinite ==
            brute_minimal_infinite(member));
    }
  }
}

TEST_CASE("structure checks") {
  SUBCASE("the 8-vertex example passes") {
    const auto rep = check_structure(qvtest::twin_triangles());
    CHECK(rep.ok);
    CHECK_FALSE(rep.cycle_graph);
    CHECK(rep.violations.empty());
  }
  SUBCASE("non-oriented 4-cycle passes through the cycle-shape exception") {
    const auto rep = check_structure(qvtest::cycle_quiver(4, 0b0011));
    CHECK(rep.ok);
    CHECK(rep.cycle_graph);
    CHECK(rep.cycle_arms == std::make_pair(2, 2));
  }
  SUBCASE("finite type violates the precondition") {
    CHECK_THROWS_AS(check_structure(qvtest::cycle_quiver(4, 0b1111)), error);
  }
  SUBCASE("Kronecker is the two-vertex regime") {
    const auto rep = check_structure(make({"1", "2"}, {{"1", "2", 2}}));
    CHECK(rep.ok);
  }
}
