// Presentations and the monomial basis: factor-closure, ordering, slices,
// multiplication, validation, component restriction, and the DSL.
#include "doctest.h"
#include "qhh/dsl.hpp"
#include "qhh/errors.hpp"
#include "qhh/presentation.hpp"
#include "support/fixtures.hpp"

using namespace qhh;

TEST_CASE("basis of small algebras") {
  auto d = fixtures::dual_numbers();
  CHECK(d.dim() == 2);
  CHECK(d.is_rsz());

  auto k2 = fixtures::kronecker(2);
  CHECK(k2.dim() == 4);  // two vertices, two arrows
  CHECK(k2.max_basis_length() == 1);

  auto t = fixtures::tangle3();
  CHECK(t.dim() == 21);
  CHECK(t.relations().size() == 18);
  CHECK(!t.is_rsz());
  // Slices: 3 vertices, 6 arrows, 11 length-2 words, 1 length-3 survivor.
  CHECK(slice_sizes(t) == std::vector<int>{3, 6, 11, 1});
}

TEST_CASE("basis is ordered by length then lexicographically") {
  auto p = fixtures::local_loops(2);
  const auto& b = p.basis();
  REQUIRE(b.size() == 3);
  CHECK(b[0].trivial());
  CHECK(b[1].length() == 1);
  CHECK(b[2].length() == 1);
  CHECK(b[1] < b[2]);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] < b[i + 1]);
}

TEST_CASE("basis_index and factor detection") {
  auto t = fixtures::tangle3();
  const Quiver& q = t.quiver();
  Path good;  // a.ga.d, the only length-3 basis word
  good.start = *q.vertex_index("e3");
  good.arrows = {*q.arrow_index("a"), *q.arrow_index("ga"),
                 *q.arrow_index("d")};
  CHECK(t.basis_index(good).has_value());
  CHECK(t.is_basis_path(good));

  Path dead;  // d.d.d is a relation
  dead.start = *q.vertex_index("e2");
  dead.arrows = std::vector<int>(3, *q.arrow_index("d"));
  CHECK(!t.basis_index(dead).has_value());
  CHECK(t.has_forbidden_factor(dead));

  // A word containing d.d.d as a contiguous factor is also dead.
  Path longer = dead;
  longer.start = *q.vertex_index("e1");
  longer.arrows.insert(longer.arrows.begin(), *q.arrow_index("ga"));
  CHECK(t.has_forbidden_factor(longer));
}

TEST_CASE("multiplication in the basis") {
  auto t = fixtures::tangle3();
  const Quiver& q = t.quiver();
  Path a;  // the arrow a : e3 -> e1
  a.start = *q.vertex_index("e3");
  a.arrows = {*q.arrow_index("a")};
  Path ga;  // ga : e1 -> e2
  ga.start = *q.vertex_index("e1");
  ga.arrows = {*q.arrow_index("ga")};
  int ia = *t.basis_index(a), iga = *t.basis_index(ga);
  auto prod = t.mult(ia, iga);  // traverse a, then ga
  REQUIRE(prod.has_value());
  CHECK(t.basis()[*prod].length() == 2);
  // Multiplying by the wrong idempotent side gives nothing.
  CHECK(!t.mult(iga, ia).has_value());
}

TEST_CASE("infinite-dimensional presentations are rejected") {
  Quiver q;
  int v = q.add_vertex("v");
  q.add_arrow("x", v, v);
  CHECK_THROWS_AS(Presentation(q, {}), SemanticError);
}

TEST_CASE("relation sets must be minimal antichains") {
  Quiver q;
  int v = q.add_vertex("v");
  int x = q.add_arrow("x", v, v);
  Path xx;
  xx.start = v;
  xx.arrows = {x, x};
  Path xxx;
  xxx.start = v;
  xxx.arrows = {x, x, x};
  // x.x.x contains the factor x.x, so the pair is not an antichain.
  CHECK_THROWS_AS(Presentation(q, {xx, xxx}), SemanticError);
  // Relations of length < 2 are not admissible.
  Path just_x;
  just_x.start = v;
  just_x.arrows = {x};
  CHECK_THROWS_AS(Presentation(q, {just_x}), SemanticError);
}

TEST_CASE("restrict_to_component keeps names and relations") {
  auto p = fixtures::two_local_blocks(2, 1);
  auto comp = p.quiver().components();
  auto first = restrict_to_component(p, comp[*p.quiver().vertex_index("u")]);
  CHECK(first.quiver().n_vertices() == 1);
  CHECK(first.quiver().n_arrows() == 2);
  CHECK(first.relations().size() == 4);
  CHECK(first.dim() == 3);
  CHECK(first.quiver().vertex_name(0) == "u");
  auto second = restrict_to_component(p, comp[*p.quiver().vertex_index("v")]);
  CHECK(second.dim() == 2);
  CHECK_THROWS_AS(restrict_to_component(p, 99), SemanticError);
}

TEST_CASE("DSL parse and canonical serialization round-trip") {
  std::string text =
      "# demo\n"
      "field F 5\n"
      "vertex u v\n"
      "arrow a : u -> v\n"
      "arrow b : u -> v\n";
  ParsedInput in = parse_dsl(text);
  REQUIRE(in.field.has_value());
  CHECK(in.field->p == 5);
  CHECK(in.pres.dim() == 4);
  std::string canon = serialize_dsl(in.pres, in.field);
  ParsedInput again = parse_dsl(canon);
  CHECK(serialize_dsl(again.pres, again.field) == canon);
}

TEST_CASE("DSL relations are read in traversal order") {
  std::string text =
      "field Q\n"
      "vertex u v w\n"
      "arrow a : u -> v\n"
      "arrow b : v -> w\n"
      "relation a.b\n";  // first traverse a, then b
  ParsedInput in = parse_dsl(text);
  REQUIRE(in.pres.relations().size() == 1);
  const Path& r = in.pres.relations()[0];
  CHECK(path_source(in.pres.quiver(), r) == *in.pres.quiver().vertex_index("u"));
  CHECK(path_target(in.pres.quiver(), r) == *in.pres.quiver().vertex_index("w"));
  CHECK(in.pres.dim() == 5);  // u, v, w, a, b; the composite is dead
}

TEST_CASE("DSL errors carry their kind") {
  // Syntax problems are parse errors; name resolution and admissibility
  // problems are semantic errors.
  CHECK_THROWS_AS(parse_dsl("vertex ???\n"), ParseError);
  CHECK_THROWS_AS(parse_dsl("arrow a : u ->\n"), ParseError);
  CHECK_THROWS_AS(parse_dsl("vertex v\narrow a : u -> v\n"), SemanticError);
  CHECK_THROWS_AS(parse_dsl("field F 6\n"), SemanticError);  // not prime
  CHECK_THROWS_AS(
      parse_dsl("field Q\nvertex v\narrow x : v -> v\nrelation x\n"),
      SemanticError);  // length-1 relation
  CHECK_THROWS_AS(parse_dsl("field Q\nvertex v\narrow x : v -> v\n"),
                  SemanticError);  // infinite dimensional
}

TEST_CASE("fixture DSL files agree with the programmatic fixtures") {
  auto parsed = parse_dsl_file(fixtures::data_path("tangle3.bq"));
  CHECK(serialize_dsl(parsed.pres, FieldSpec{0}) ==
        serialize_dsl(fixtures::tangle3(), FieldSpec{0}));
  auto line = parse_dsl_file(fixtures::data_path("line_tails.bq"));
  CHECK(serialize_dsl(line.pres, FieldSpec{0}) ==
        serialize_dsl(fixtures::line_with_tails(), FieldSpec{0}));
}
