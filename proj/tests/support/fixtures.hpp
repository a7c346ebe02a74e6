// Shared test fixtures: small bound quiver algebras with hand-checkable
// cohomology, used across the unit, property, and acceptance suites.
#pragma once

#include <string>
#include <vector>

#include "qhh/presentation.hpp"

namespace qhh::fixtures {

// Locate a DSL file under the directory named by QHH_FIXTURE_DIR.
std::string data_path(const std::string& name);

// Impose rad^2 = 0 on a quiver: every composable length-2 word is a relation.
Presentation rsz_of(const Quiver& q);

// Single arrow al : e1 -> e2, no relations (hereditary A2).
Presentation a2();

// One vertex, one loop x with x^2 = 0 (the dual numbers k[x]/(x^2)).
Presentation dual_numbers();

// One vertex, m loops, rad^2 = 0.  HH^1 is gl_m; for m >= 2 and n > 1,
// dim HH^n = m^{n+1} - m^{n-1}.
Presentation local_loops(int m);

// Two vertices e1, e2 and m parallel arrows e1 -> e2 (the m-Kronecker
// quiver).  Hereditary; HH^1 is sl_m (dim m^2 - 1) and HH^n = 0 for n > 1.
Presentation kronecker(int m);

// Oriented line with a bounce: b : e2 -> e1, c : e1 -> e3, d : e3 -> e5,
// a : e5 -> e4, no relations.  Gluing e1, e5 produces a one-dimensional
// special-pair space spanned by a genuine linear combination.
Presentation line_with_tails();

// Fan with bridges: a : e2 -> e1, al1..aln : e1 -> e4, b : e4 -> e3,
// no relations.  Gluing e1, e4 makes the fan a family of loops.
Presentation bridge_fan(int n);

// Same fan but with the outgoing bridge reversed (b : e3 -> e4) and the
// compositions ali . a set to zero, so nothing survives the junction.
Presentation bridge_fan_reversed(int n);

// The glued bridge fan presented directly: f1 with n loops al1..aln where
// all products ali alj vanish, a : e2 -> f1, b : f1 -> e3.  When
// `with_junction` is false, the composite b.a is NOT a relation, which is
// the variant with a strictly larger algebra (dim 4n + 6 vs 4n + 5).
Presentation glued_fan_direct(int n, bool with_junction);

// Loop with legs: al loop at e1 with al^2 = 0, be : e2 -> e1, ga : e1 -> e3.
// Gluing e1, e3 puts a power relation on a loop at a glued vertex, so the
// characteristic-2 assumption fails.
Presentation loop_with_legs();

// Three vertices, six arrows (a loop al at e1, be : e1 -> e3, ga : e1 -> e2,
// a : e3 -> e1, c : e3 -> e2, d : e2 -> e2), and all composable length-3
// words EXCEPT a.ga.d as relations (18 relations, dim 21).  Gluing e1, e3
// produces a rich special-pair space.
Presentation tangle3();

// Diamond with a tail: al1, al2 : e1 -> e2, be : e2 -> e4, ga : e1 -> e4,
// eta : e1 -> e3, with be . al1 = 0.  Gluing the source e1 with the sink e4
// adds a one-dimensional ideal summand to HH^1.
Presentation diamond_with_tail();

// Alternating zig-zag on 2*half vertices: e1 -> e2 <- e3 -> e4 <- ... with
// rad^2 = 0 vacuously.  Gluing the extreme source/sink keeps HH^n = 0 for
// n > 1.
Presentation zigzag(int half);

// Disjoint union of an m-loop and an n-loop local block, rad^2 = 0.
// Gluing the two vertices merges gl_m x gl_n into gl_{m+n}.
Presentation two_local_blocks(int m, int n);

// Oriented line e1 -> e2 -> ... -> ek with rad^2 = 0.
Presentation rsz_line(int k);

// Nine-vertex radical-square-zero algebra whose HH^1 in characteristic zero
// is sl_2 x sl_2 x k^4 (two parallel classes of size 2; reduced Betti
// number 4).
Presentation sl2_pair_quiver();

// Names of arrows in sl2_pair_quiver used by the reduction chain.
struct ReductionStep {
  std::string split_at;                        // vertex of the glued algebra
  std::vector<std::string> sources_to_second;  // arrows re-rooted at e_n
  std::vector<std::string> targets_to_second;
};

// The split chain that disassembles sl2_pair_quiver into Kronecker pieces.
std::vector<ReductionStep> sl2_pair_reduction();

}  // namespace qhh::fixtures
