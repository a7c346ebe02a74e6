// Quiver combinatorics: lookups, components, Euler characteristics,
// parallel classes, and the crown predicate.
#include "doctest.h"
#include "qhh/quiver.hpp"
#include "support/fixtures.hpp"

using namespace qhh;

TEST_CASE("vertex and arrow bookkeeping") {
  Quiver q;
  int u = q.add_vertex("u"), v = q.add_vertex("v");
  int a = q.add_arrow("a", u, v);
  CHECK(q.n_vertices() == 2);
  CHECK(q.n_arrows() == 1);
  CHECK(q.vertex_name(u) == "u");
  CHECK(q.arrow(a).name == "a");
  CHECK(q.vertex_index("v") == v);
  CHECK(!q.vertex_index("w").has_value());
  CHECK(q.arrow_index("a") == a);
  CHECK(!q.arrow_index("b").has_value());
  CHECK(q.arrows_from(u) == std::vector<int>{a});
  CHECK(q.arrows_to(v) == std::vector<int>{a});
  CHECK(q.is_source(u));
  CHECK(q.is_sink(v));
  CHECK(!q.is_isolated(u));
}

TEST_CASE("components and Euler rank") {
  auto q_pres = fixtures::two_local_blocks(1, 2);
  const Quiver& q = q_pres.quiver();
  CHECK(q.n_components() == 2);
  auto comp = q.components();
  CHECK(comp[0] != comp[1]);
  // chi = m - n + c = 3 - 2 + 2.
  CHECK(q.euler_rank() == 3);

  auto line_pres = fixtures::rsz_line(4);
  const Quiver& line = line_pres.quiver();
  CHECK(line.n_components() == 1);
  CHECK(line.euler_rank() == 0);  // a tree
}

TEST_CASE("components_without tracks vertex deletion") {
  // Removing the middle of a line disconnects it.
  auto line_pres = fixtures::rsz_line(3);
  const Quiver& line = line_pres.quiver();
  auto comp = line.components_without(*line.vertex_index("e2"));
  CHECK(comp[*line.vertex_index("e2")] == -1);
  CHECK(comp[*line.vertex_index("e1")] != comp[*line.vertex_index("e3")]);
}

TEST_CASE("parallel classes and the reduced Euler rank") {
  auto q_pres = fixtures::kronecker(3);
  const Quiver& q = q_pres.quiver();
  auto classes = q.parallel_classes();
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size() == 3);
  // Collapsing the triple arrow leaves a tree, so no class is a non-tree
  // edge of the reduced quiver.
  CHECK(q.nontree_parallel_classes().empty());
  CHECK(q.reduced_euler_rank() == 0);
  CHECK(q.euler_rank() == 2);

  auto s_pres = fixtures::sl2_pair_quiver();
  const Quiver& s = s_pres.quiver();
  // Two nontrivial classes (the loop pair and the double arrow).
  int nontrivial = 0;
  for (const auto& c : s.parallel_classes())
    if (c.size() > 1) ++nontrivial;
  CHECK(nontrivial == 2);
  CHECK(s.reduced_euler_rank() == 4);
}

TEST_CASE("crown recognition") {
  // A crown is an oriented cycle: every vertex has one arrow in, one out.
  CHECK(fixtures::dual_numbers().quiver().is_crown());
  CHECK(!fixtures::local_loops(2).quiver().is_crown());
  CHECK(!fixtures::kronecker(2).quiver().is_crown());
  Quiver cycle;
  int a = cycle.add_vertex("a"), b = cycle.add_vertex("b");
  cycle.add_arrow("x", a, b);
  cycle.add_arrow("y", b, a);
  CHECK(cycle.is_crown());
}
