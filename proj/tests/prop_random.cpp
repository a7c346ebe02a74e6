// Property-based tests on seeded random presentations and gluings: oracle
// agreement, identity batches, structural laws, and round trips.  The
// acceptance gate runs the full-size batches; these are smaller versions
// to keep the default test run quick.
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qhh/bar.hpp"
#include "qhh/glue.hpp"
#include "qhh/lie.hpp"
#include "qhh/paircomplex.hpp"
#include "qhh/randgen.hpp"
#include "qhh/rsz.hpp"
#include "qhh/verify.hpp"

using namespace qhh;

TEST_CASE("oracle equivalence on random monomial presentations") {
  RationalField Q;
  PrimeField F5(5);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    CAPTURE(seed);
    InstanceGen gen(1000 + seed);
    Presentation p = gen.presentation();
    REQUIRE(p.dim() <= 14);

    CmonComplex c = build_cmon(p);
    // Structural law: d1 . d0 = 0 on every constructed instance.
    for (int j = 0; j < c.v_pairs.size(); ++j)
      CHECK(c.d1.apply(c.d0.cols[j]).empty());

    BarComplex bar(p, 1);
    auto anQ = analyze_cmon(Q, c);
    auto barQ = bar_hh_dims(Q, bar, 1);
    CHECK(barQ[0] == anQ.hh0_dim);
    CHECK(barQ[1] == anQ.hh1_dim);
    auto anP = analyze_cmon(F5, c);
    auto barP = bar_hh_dims(F5, bar, 1);
    CHECK(barP[0] == anP.hh0_dim);
    CHECK(barP[1] == anP.hh1_dim);
  }
}

TEST_CASE("oracle equivalence on random radical-square-zero instances") {
  RationalField Q;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    CAPTURE(seed);
    InstanceGen gen(2000 + seed);
    RandOptions opt;
    opt.rsz = true;
    opt.max_dim = 12;
    Presentation p = gen.presentation(opt);
    REQUIRE(p.is_rsz());
    BarComplex bar(p, 3);
    RszComplex rc(p, 3);
    CHECK(bar_hh_dims(Q, bar, 3) == rsz_hh_dims(Q, rc, 3));
  }
}

TEST_CASE("identity batches on random gluings") {
  const std::pair<BlockShape, IncidenceShape> configs[] = {
      {BlockShape::Same, IncidenceShape::Generic},
      {BlockShape::Same, IncidenceShape::SourceSink},
      {BlockShape::Different, IncidenceShape::Generic},
      {BlockShape::Different, IncidenceShape::SourceSink},
  };
  FieldSpec field{0};
  int config_id = 0;
  for (const auto& [block, inc] : configs) {
    ++config_id;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      CAPTURE(config_id);
      CAPTURE(seed);
      InstanceGen gen(3000 + 100 * config_id + seed);
      GlueCase gc = gen.glue_case(block, inc, field);
      VerifyOptions vo;
      vo.field = field;
      VerifyResult vr = verify_gluing(gc.A, gc.e1, gc.en, vo);
      CHECK(!vr.advisory);
      for (const auto& chk : vr.checks) {
        CAPTURE(chk.name);
        CAPTURE(chk.detail);
        CHECK(chk.pass);
      }
    }
  }
}

TEST_CASE("identity batches over a prime field") {
  FieldSpec field{5};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    InstanceGen gen(4000 + seed);
    GlueCase gc =
        gen.glue_case(BlockShape::Same, IncidenceShape::Generic, field);
    VerifyOptions vo;
    vo.field = field;
    VerifyResult vr = verify_gluing(gc.A, gc.e1, gc.en, vo);
    CHECK(!vr.advisory);
    for (const auto& chk : vr.checks) {
      CAPTURE(chk.name);
      CAPTURE(chk.detail);
      CHECK(chk.pass);
    }
  }
}

TEST_CASE("Lie axioms hold exactly on random first cohomology") {
  RationalField Q;
  PrimeField F5(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    InstanceGen gen(5000 + seed);
    Presentation p = gen.presentation();
    CmonComplex c = build_cmon(p);
    BracketCache bc(c);
    auto check_axioms = [&](const auto& K) {
      auto an = analyze_cmon(K, c);
      auto L = hh1_lie(K, c, bc, an);
      for (int i = 0; i < L.d; ++i)
        for (int j = 0; j < L.d; ++j) {
          CHECK(svec_axpy(K, L.table[i][j], K.one(), L.table[j][i]).empty());
          for (int k = 0; k < L.d; ++k) {
            auto s = L.bracket(K, L.table[i][j], svec_unit(K, k));
            s = svec_axpy(K, s, K.one(),
                          L.bracket(K, L.table[j][k], svec_unit(K, i)));
            s = svec_axpy(K, s, K.one(),
                          L.bracket(K, L.table[k][i], svec_unit(K, j)));
            CHECK(s.empty());
          }
        }
    };
    check_axioms(Q);
    check_axioms(F5);
  }
}

TEST_CASE("glue then split is the identity on random instances") {
  FieldSpec field{0};
  const std::pair<BlockShape, IncidenceShape> configs[] = {
      {BlockShape::Same, IncidenceShape::Generic},
      {BlockShape::Different, IncidenceShape::Generic},
  };
  for (int c = 0; c < 2; ++c) {
    for (std::uint64_t seed = 0; seed < 13; ++seed) {
      CAPTURE(c);
      CAPTURE(seed);
      InstanceGen gen(6000 + 50 * c + seed);
      GlueCase gc = gen.glue_case(configs[c].first, configs[c].second, field);
      const Presentation& A = gc.A;
      Gluing g = glue(A, gc.e1, gc.en);
      std::set<int> srcs, tgts;
      for (int a = 0; a < A.quiver().n_arrows(); ++a) {
        if (A.quiver().arrow(a).src == gc.en) srcs.insert(a);
        if (A.quiver().arrow(a).tgt == gc.en) tgts.insert(a);
      }
      SplitResult s = split_vertex(g.B, g.f1, srcs, tgts);
      REQUIRE(s.A.quiver().n_vertices() == A.quiver().n_vertices());
      REQUIRE(s.A.quiver().n_arrows() == A.quiver().n_arrows());
      std::vector<int> pi(A.quiver().n_vertices(), -1);
      for (int v = 0; v < A.quiver().n_vertices(); ++v)
        pi[v] = (v == gc.en) ? s.en : s.vmap[g.vmap[v]];
      for (int a = 0; a < A.quiver().n_arrows(); ++a) {
        CHECK(s.A.quiver().arrow(a).src == pi[A.quiver().arrow(a).src]);
        CHECK(s.A.quiver().arrow(a).tgt == pi[A.quiver().arrow(a).tgt]);
      }
      std::set<std::vector<int>> ra, rs;
      for (const auto& r : A.relations()) ra.insert(r.arrows);
      for (const auto& r : s.A.relations()) rs.insert(r.arrows);
      CHECK(ra == rs);
      CHECK(s.A.dim() == A.dim());
    }
  }
}

TEST_CASE("generated glue cases satisfy their requested shapes") {
  FieldSpec field{0};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    InstanceGen gen(7000 + seed);
    auto ss = gen.glue_case(BlockShape::Same, IncidenceShape::SourceSink, field);
    CHECK(ss.A.quiver().is_source(ss.e1));
    CHECK(ss.A.quiver().is_sink(ss.en));
    auto comp = ss.A.quiver().components();
    CHECK(comp[ss.e1] == comp[ss.en]);

    auto diff =
        gen.glue_case(BlockShape::Different, IncidenceShape::Generic, field);
    auto comp2 = diff.A.quiver().components();
    CHECK(comp2[diff.e1] != comp2[diff.en]);
  }
}
