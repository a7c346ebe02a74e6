// The Lie algebra structure on first cohomology: brackets, profiles,
// weight-zero decomposition, the closed-form model, and p-powers.
#include "doctest.h"
#include "qhh/lie.hpp"
#include "support/fixtures.hpp"

using namespace qhh;

namespace {

// Antisymmetry and Jacobi, checked on all basis pairs/triples.
template <class F>
void check_lie_axioms(const F& K, const LieAlgebra<F>& L) {
  for (int i = 0; i < L.d; ++i) {
    CHECK(L.bracket(K, svec_unit(K, i), svec_unit(K, i)).empty());
    for (int j = 0; j < L.d; ++j) {
      auto anti = svec_axpy(K, L.table[i][j], K.one(), L.table[j][i]);
      CHECK(anti.empty());
      for (int k = 0; k < L.d; ++k) {
        auto s = L.bracket(K, L.table[i][j], svec_unit(K, k));
        s = svec_axpy(K, s, K.one(),
                      L.bracket(K, L.table[j][k], svec_unit(K, i)));
        s = svec_axpy(K, s, K.one(),
                      L.bracket(K, L.table[k][i], svec_unit(K, j)));
        CHECK(s.empty());
      }
    }
  }
}

}  // namespace

TEST_CASE("abstract gl and sl profiles") {
  RationalField K;
  auto gl2 = lie_profile(K, abstract_gl(K, 2));
  CHECK(gl2.dim == 4);
  CHECK(gl2.center_dim == 1);
  CHECK(gl2.derived_subalgebra_dim == 3);
  CHECK(!gl2.solvable);
  auto sl2 = lie_profile(K, abstract_sl(K, 2));
  CHECK(sl2.dim == 3);
  CHECK(sl2.center_dim == 0);
  CHECK(sl2.derived_subalgebra_dim == 3);
  auto ab = lie_profile(K, abelian_lie(K, 4));
  CHECK(ab.abelian);
  CHECK(ab.center_dim == 4);
  CHECK(ab.nilpotent);

  check_lie_axioms(K, abstract_gl(K, 3));
}

TEST_CASE("direct sums add profiles") {
  RationalField K;
  auto L = direct_sum(K, abstract_sl(K, 2), abelian_lie(K, 2));
  auto p = lie_profile(K, L);
  CHECK(p.dim == 5);
  CHECK(p.center_dim == 2);
  CHECK(p.derived_subalgebra_dim == 3);
  check_lie_axioms(K, L);
}

TEST_CASE("HH^1 of the local two-loop algebra is gl_2") {
  RationalField K;
  auto p = fixtures::local_loops(2);
  CmonComplex c = build_cmon(p);
  auto an = analyze_cmon(K, c);
  BracketCache bc(c);
  auto L = hh1_lie(K, c, bc, an);
  check_lie_axioms(K, L);
  CHECK(lie_profile(K, L) == lie_profile(K, abstract_gl(K, 2)));
}

TEST_CASE("HH^1 of the Kronecker quiver is sl_2") {
  RationalField K;
  auto p = fixtures::kronecker(2);
  CmonComplex c = build_cmon(p);
  auto an = analyze_cmon(K, c);
  BracketCache bc(c);
  auto L = hh1_lie(K, c, bc, an);
  check_lie_axioms(K, L);
  CHECK(lie_profile(K, L) == lie_profile(K, abstract_sl(K, 2)));
}

TEST_CASE("brackets of pair cochains respect the cocycle condition") {
  RationalField K;
  auto p = fixtures::tangle3();
  CmonComplex c = build_cmon(p);
  auto an = analyze_cmon(K, c);
  BracketCache bc(c);
  // The bracket of two cocycles is again a cocycle.
  auto kd1 = an.ker_d1.echelon(K);
  for (int i = 0; i < an.hh1_reps.dim(); ++i)
    for (int j = i + 1; j < an.hh1_reps.dim(); ++j) {
      auto br = bracket_vec(K, bc, an.hh1_reps.basis[i], an.hh1_reps.basis[j]);
      CHECK(kd1.contains(br));
    }
  auto L = hh1_lie(K, c, bc, an);
  check_lie_axioms(K, L);
}

TEST_CASE("weight-zero decomposition of the Kronecker quiver") {
  RationalField K;
  auto p = fixtures::kronecker(3);
  CmonComplex c = build_cmon(p);
  auto dec = l0_decomposition(K, c);
  CHECK(dec.chi_reduced == 0);
  REQUIRE(dec.classes.size() == 1);
  CHECK(dec.classes[0].arrows.size() == 3);
  // Traceless block on the class: off-diagonals plus diagonal differences.
  CHECK(dec.classes[0].block_dim == 8);
  CHECK(dec.dim == 8);
}

TEST_CASE("closed-form prediction for radical square zero algebras") {
  RationalField K;

  auto check_sf = [&](const Presentation& p) {
    auto pred = sf_prediction(p);
    CmonComplex c = build_cmon(p);
    auto an = analyze_cmon(K, c);
    CHECK(pred.dim == an.hh1_dim);
    BracketCache bc(c);
    CHECK(lie_profile(K, hh1_lie(K, c, bc, an)) ==
          lie_profile(K, sf_model(K, pred)));
    return pred;
  };

  auto k3 = check_sf(fixtures::kronecker(3));
  CHECK(k3.class_sizes == std::vector<int>{3});
  CHECK(k3.chi_reduced == 0);
  CHECK(k3.dim == 8);

  auto big = check_sf(fixtures::sl2_pair_quiver());
  CHECK(big.class_sizes == std::vector<int>{2, 2});
  CHECK(big.chi_reduced == 4);
  CHECK(big.dim == 10);

  check_sf(fixtures::zigzag(3));
  check_sf(fixtures::rsz_line(4));
  check_sf(fixtures::local_loops(2));
}

TEST_CASE("p-power map lands on cocycles modulo coboundaries") {
  PrimeField K(2);
  auto p = fixtures::local_loops(2);
  CmonComplex c = build_cmon(p);
  auto an = analyze_cmon(K, c);
  BracketCache bc(c);
  auto table = p_power_table(K, c, an);
  REQUIRE(static_cast<int>(table.size()) == an.hh1_reps.dim());
  auto kd1 = an.ker_d1.echelon(K);
  for (const auto& v : table) CHECK(kd1.contains(v));
}

TEST_CASE("p-power map refuses characteristic zero") {
  RationalField K;
  auto p = fixtures::local_loops(2);
  CmonComplex c = build_cmon(p);
  auto an = analyze_cmon(K, c);
  CHECK_THROWS_AS(p_power_class(K, c, an, an.hh1_reps.basis[0]),
                  SemanticError);
}
