// The identity verifier: suite selection, pass/fail semantics, and advisory
// mode when the characteristic assumption fails.
#include "doctest.h"
#include "qhh/errors.hpp"
#include "qhh/verify.hpp"
#include "support/fixtures.hpp"

using namespace qhh;

namespace {

int vx(const Presentation& p, const char* name) {
  return *p.quiver().vertex_index(name);
}

VerifyResult run(const Presentation& A, const char* a, const char* b,
                 FieldSpec field = FieldSpec{0}) {
  VerifyOptions vo;
  vo.field = field;
  return verify_gluing(A, vx(A, a), vx(A, b), vo);
}

}  // namespace

TEST_CASE("all identities hold on the reference gluings over Q") {
  CHECK(run(fixtures::a2(), "e1", "e2").all_pass());
  CHECK(run(fixtures::line_with_tails(), "e1", "e5").all_pass());
  CHECK(run(fixtures::bridge_fan(2), "e1", "e4").all_pass());
  CHECK(run(fixtures::bridge_fan_reversed(2), "e1", "e4").all_pass());
  CHECK(run(fixtures::tangle3(), "e1", "e3").all_pass());
  CHECK(run(fixtures::diamond_with_tail(), "e1", "e4").all_pass());
  CHECK(run(fixtures::zigzag(3), "e1", "e6").all_pass());
  CHECK(run(fixtures::two_local_blocks(2, 3), "u", "v").all_pass());
  CHECK(run(fixtures::sl2_pair_quiver(), "va", "vg").all_pass());
}

TEST_CASE("all identities hold over small prime fields") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    CAPTURE(p);
    CHECK(run(fixtures::line_with_tails(), "e1", "e5", FieldSpec{p}).all_pass());
    CHECK(run(fixtures::tangle3(), "e1", "e3", FieldSpec{p}).all_pass());
    CHECK(run(fixtures::bridge_fan(2), "e1", "e4", FieldSpec{p}).all_pass());
  }
  // The A2 gluing satisfies the assumption even in characteristic 2: the
  // power relation appears only after gluing.
  auto vr = run(fixtures::a2(), "e1", "e2", FieldSpec{2});
  CHECK(!vr.advisory);
  CHECK(vr.all_pass());
}

TEST_CASE("failed assumption switches to advisory mode") {
  auto vr = run(fixtures::loop_with_legs(), "e1", "e3", FieldSpec{2});
  CHECK(vr.advisory);
  CHECK(!vr.assumption_violations.empty());
  CHECK(!vr.checks.empty());  // the identities are still evaluated
  // In characteristic 3 the same gluing is a normal pass.
  auto ok = run(fixtures::loop_with_legs(), "e1", "e3", FieldSpec{3});
  CHECK(!ok.advisory);
  CHECK(ok.all_pass());
}

TEST_CASE("suite selection limits the checks") {
  auto A = fixtures::line_with_tails();
  VerifyOptions vo;
  vo.suites = {"im0"};
  auto narrow = verify_gluing(A, vx(A, "e1"), vx(A, "e5"), vo);
  auto full = run(A, "e1", "e5");
  CHECK(narrow.checks.size() < full.checks.size());
  CHECK(narrow.all_pass());
  for (const auto& c : narrow.checks) {
    CAPTURE(c.name);
    bool relevant = c.name.find("im0") != std::string::npos ||
                    c.name.find("context") != std::string::npos;
    CHECK(relevant);
  }
}

TEST_CASE("unknown suite names are rejected") {
  auto A = fixtures::a2();
  VerifyOptions vo;
  vo.suites = {"no-such-suite"};
  CHECK_THROWS_AS(verify_gluing(A, vx(A, "e1"), vx(A, "e2"), vo),
                  SemanticError);
}

TEST_CASE("verify_suite_names lists the supported suites") {
  auto names = verify_suite_names();
  CHECK(names.size() == 7);
  for (const char* expected :
       {"im0", "ker1", "hh1", "diagram", "center", "pi1", "highdeg"}) {
    bool found = false;
    for (const auto& n : names)
      if (n == expected) found = true;
    CAPTURE(expected);
    CHECK(found);
  }
}
