// The two-term pair complex: pair spaces, coboundaries, weights, rendering,
// and degree-0/1 cohomology on hand-checked examples.
#include "doctest.h"
#include "qhh/paircomplex.hpp"
#include "support/fixtures.hpp"

using namespace qhh;

namespace {

// d1 ∘ d0 must vanish identically; shared by several cases below.
void check_complex(const CmonComplex& c) {
  for (int j = 0; j < c.v_pairs.size(); ++j)
    CHECK(c.d1.apply(c.d0.cols[j]).empty());
}

}  // namespace

TEST_CASE("pair spaces of the dual numbers") {
  auto p = fixtures::dual_numbers();
  CmonComplex c = build_cmon(p);
  CHECK(c.v_pairs.size() == 2);  // e1||e1 and e1||x
  CHECK(c.a_pairs.size() == 2);  // x||e1 and x||x
  CHECK(c.r_pairs.size() == 2);  // x.x||e1 and x.x||x
  CHECK(c.v_pairs.index_of(0, 0) >= 0);
  CHECK(c.v_pairs.index_of(0, 1) >= 0);
  check_complex(c);

  // The coboundary of both vertex pairs vanishes: d0 = 0 here.
  CHECK(c.d0.is_zero());

  // d1(x||e1) substitutes the trivial path into x.x twice: 2 * (x.x||x).
  int xe = c.a_pairs.index_of(0, 0);
  REQUIRE(xe >= 0);
  IntVec col = c.d1.cols[xe];
  REQUIRE(col.size() == 1);
  CHECK(col[0].second == 2);
  // d1(x||x) rewrites x.x to itself, which is not a basis path: zero.
  int xx = c.a_pairs.index_of(0, 1);
  CHECK(c.d1.cols[xx].empty());
}

TEST_CASE("weights and rendering") {
  auto p = fixtures::dual_numbers();
  CmonComplex c = build_cmon(p);
  CHECK(c.v_weight(c.v_pairs.index_of(0, 0)) == 0);
  CHECK(c.v_weight(c.v_pairs.index_of(0, 1)) == 1);
  CHECK(c.a_weight(c.a_pairs.index_of(0, 0)) == -1);
  CHECK(c.a_weight(c.a_pairs.index_of(0, 1)) == 0);
  CHECK(c.render_a(c.a_pairs.index_of(0, 1)) == "x||x");

  RationalField K;
  SVec<RationalField> v = svec_from_int(K, {{0, 1}, {1, -2}});
  std::string s = render_vec(K, c, true, v);
  CHECK(s.find("x||") != std::string::npos);
  CHECK(s.find("2") != std::string::npos);
  CHECK(render_vec(K, c, true, {}) == "0");
}

TEST_CASE("cohomology of hand-checked algebras over Q") {
  RationalField K;

  auto check_dims = [&](const Presentation& p, int hh0, int hh1) {
    CmonComplex c = build_cmon(p);
    check_complex(c);
    auto an = analyze_cmon(K, c);
    CHECK(an.hh0_dim == hh0);
    CHECK(an.hh1_dim == hh1);
    CHECK(an.hh1_reps.dim() == hh1);
    CHECK(an.ker_d1.dim() == an.im_d0.dim() + hh1);
  };

  check_dims(fixtures::dual_numbers(), 2, 1);     // k[x]/(x^2)
  check_dims(fixtures::local_loops(2), 3, 4);     // commutative; gl_2 in degree 1
  check_dims(fixtures::kronecker(2), 1, 3);       // sl_2
  check_dims(fixtures::kronecker(3), 1, 8);       // sl_3
  check_dims(fixtures::a2(), 1, 0);               // hereditary tree
  check_dims(fixtures::line_with_tails(), 1, 0);  // 0 in degree 1
  check_dims(fixtures::tangle3(), 5, 13);
  check_dims(fixtures::diamond_with_tail(), 1, 4);
  check_dims(fixtures::sl2_pair_quiver(), 3, 10);  // the two loops are central
}

TEST_CASE("characteristic changes the kernel of d1") {
  auto p = fixtures::dual_numbers();
  CmonComplex c = build_cmon(p);
  RationalField Q;
  PrimeField F2(2), F3(3);
  CHECK(analyze_cmon(Q, c).hh1_dim == 1);
  CHECK(analyze_cmon(F3, c).hh1_dim == 1);
  // In characteristic 2 the coboundary 2*(x.x||x) vanishes.
  CHECK(analyze_cmon(F2, c).hh1_dim == 2);
}

TEST_CASE("substitution of an arrow occurrence in a relation") {
  auto p = fixtures::dual_numbers();
  const Quiver& q = p.quiver();
  Path triv;
  triv.start = 0;
  const Path& rel = p.relations()[0];  // x.x
  // Replacing x by the trivial path in x.x leaves x, twice.
  IntVec img = substitute(p, rel, *q.arrow_index("x"), triv);
  REQUIRE(img.size() == 1);
  CHECK(img[0].second == 2);
}
