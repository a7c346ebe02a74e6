// Mechanical verification of the comparison identities attached to a vertex
// identification A -> B = glue(A, e1, en).
//
// Each suite checks one layer of the comparison: images of the degree-zero
// differential (im0), degree-one cocycles (ker1), first cohomology and the
// induced quotient structure (hh1), commutation of the coordinate maps with
// the differentials (diagram), centers (center), fundamental-group ranks
// (pi1) and, for radical-square-zero inputs glued at a source/sink pair, the
// higher-degree coordinate maps (highdeg).  Every check reports the numbers
// it compared, so failures are diagnosable from the output alone.
#pragma once

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhh/field.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;            // human-readable comparison
  nlohmann::ordered_json data;   // the raw values, for machine consumers
};

struct VerifyOptions {
  FieldSpec field;
  // Subset of {"im0","ker1","hh1","diagram","center","pi1","highdeg"};
  // empty means all.
  std::set<std::string> suites;
  int highdeg_max = 4;
};

const std::set<std::string>& verify_suite_names();

struct VerifyResult {
  std::vector<CheckResult> checks;
  // The identities are only promised under the characteristic assumption.
  // When it fails the checks still run, but their outcomes are advisory:
  // failures describe the instance instead of indicting the library.
  bool advisory = false;
  std::vector<std::string> assumption_violations;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Glues A at (e1, en) and runs the requested suites.  The first result is
// always a passing "context" entry carrying the instance invariants (shape,
// component counts, special path/pair counts, span dimensions).
VerifyResult verify_gluing(const Presentation& A, int e1, int en,
                           const VerifyOptions& opts);

}  // namespace qhh
