// The bar-complex oracle: an independent construction of Hochschild
// cohomology used to cross-check every other computation.
#include "doctest.h"
#include "qhh/bar.hpp"
#include "qhh/errors.hpp"
#include "qhh/paircomplex.hpp"
#include "qhh/rsz.hpp"
#include "support/fixtures.hpp"

using namespace qhh;

TEST_CASE("bar differentials compose to zero") {
  for (const Presentation& p :
       {fixtures::dual_numbers(), fixtures::local_loops(2),
        fixtures::kronecker(2), fixtures::tangle3()}) {
    BarComplex bar(p, 3);
    for (int n = 1; n + 1 <= 3; ++n) {
      const IntMat& dn = bar.d(n);
      const IntMat& dn1 = bar.d(n + 1);
      REQUIRE(dn1.ncols == dn.nrows);
      for (int j = 0; j < dn.ncols; ++j) CHECK(dn1.apply(dn.cols[j]).empty());
    }
  }
}

TEST_CASE("bar cohomology of hand-checked algebras") {
  RationalField K;
  auto dims = [&](const Presentation& p, int top) {
    BarComplex bar(p, top);
    return bar_hh_dims(K, bar, top);
  };
  CHECK(dims(fixtures::dual_numbers(), 3) == std::vector<int>{2, 1, 1, 1});
  CHECK(dims(fixtures::local_loops(2), 3) == std::vector<int>{3, 4, 6, 12});
  CHECK(dims(fixtures::kronecker(2), 3) == std::vector<int>{1, 3, 0, 0});
  CHECK(dims(fixtures::a2(), 3) == std::vector<int>{1, 0, 0, 0});
  CHECK(dims(fixtures::zigzag(3), 3) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("bar cohomology in positive characteristic") {
  PrimeField F2(2);
  auto p = fixtures::dual_numbers();
  BarComplex bar(p, 3);
  CHECK(bar_hh_dims(F2, bar, 3) == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("bar agrees with the pair complex in low degree") {
  RationalField K;
  for (const Presentation& p :
       {fixtures::tangle3(), fixtures::diamond_with_tail(),
        fixtures::bridge_fan(2), fixtures::line_with_tails(),
        fixtures::loop_with_legs()}) {
    BarComplex bar(p, 1);
    auto bd = bar_hh_dims(K, bar, 1);
    CmonComplex c = build_cmon(p);
    auto an = analyze_cmon(K, c);
    CHECK(bd[0] == an.hh0_dim);
    CHECK(bd[1] == an.hh1_dim);
  }
}

TEST_CASE("bar agrees with the split complex on rsz algebras") {
  RationalField K;
  PrimeField F5(5);
  for (const Presentation& p :
       {fixtures::local_loops(2), fixtures::kronecker(3), fixtures::zigzag(2),
        fixtures::two_local_blocks(1, 2), fixtures::rsz_line(3)}) {
    BarComplex bar(p, 3);
    RszComplex rc(p, 3);
    CHECK(bar_hh_dims(K, bar, 3) == rsz_hh_dims(K, rc, 3));
    CHECK(bar_hh_dims(F5, bar, 3) == rsz_hh_dims(F5, rc, 3));
  }
}

TEST_CASE("bar budget enforcement") {
  auto p = fixtures::tangle3();
  CHECK_THROWS_AS(BarComplex(p, 4, 1000), BudgetError);
}
