// Identification of two distinct vertices of a monomial presentation.
//
// glue(A, e1, en) produces B on the same arrow set: e1 and en become one
// vertex f1, the relations of A carry over verbatim, and every length-two
// junction path through f1 that was not composable in A is added as a new
// relation.  dim B = dim A - 1, and the basis of B lifts path-by-path to the
// basis of A (only the trivial path at f1 has two lifts).
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qhh/paircomplex.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

struct Gluing {
  Presentation B;
  int e1 = -1, en = -1;      // vertices of A
  int f1 = -1;               // merged vertex of B
  std::vector<int> vmap;     // A-vertex -> B-vertex (arrows map by index)
  int n_junction = 0;        // relations appended after the carried ones
};

Gluing glue(const Presentation& A, int e1, int en,
            const std::string& f1_name = "");

// Inverse construction: split vertex f of B in two.  Arrow endpoints at f
// move to the second new vertex exactly when listed (sources via
// src_to_second, targets via tgt_to_second); relations that stop being
// composable are dropped.
struct SplitResult {
  Presentation A;
  int e1 = -1, en = -1;
  std::vector<int> vmap;  // B-vertex -> A-vertex for the kept vertices
};

SplitResult split_vertex(const Presentation& B, int f,
                         const std::set<int>& src_to_second,
                         const std::set<int>& tgt_to_second,
                         const std::string& first_name = "",
                         const std::string& second_name = "");

// Starred image of an A-path in B (same arrows, merged endpoints).
Path star_path(const Gluing& g, const Path& p);

// Coordinate maps between the pair complexes (one entry per column; psi1 and
// psi2 are injective, psi0 merges the two trivial pairs at e1 and en).
struct PsiMaps {
  IntMat psi0, psi1, psi2;
};

PsiMaps psi_maps(const CmonComplex& cA, const CmonComplex& cB,
                 const Gluing& g);

// Paths of A running between e1 and en (either direction, length >= 1).
// A path is special when some arrow extends it to a basis path; this is
// equivalent to d0_B(f1 || p*) != 0, and both characterizations are computed
// and compared.
struct SpecialPaths {
  std::vector<int> special;     // A basis indices
  std::vector<int> nonspecial;  // A basis indices
  int sp() const { return static_cast<int>(special.size()); }
  int nsp() const { return static_cast<int>(nonspecial.size()); }
};

SpecialPaths special_paths(const Presentation& A, const Gluing& g,
                           const CmonComplex& cA, const CmonComplex& cB);

// Special pairs (alpha, p): an A-arrow alpha and an A-basis path p that are
// not parallel in A but whose images alpha*, p* are parallel in B (p* is
// automatically a basis path of B, since basis paths lift one-to-one along
// the gluing).  Such an alpha is necessarily incident to e1 or en.
// Classified into the seven incidence shapes: loop at a glued vertex with a
// cycle (1) or a crossing path (2); arrow between the glued vertices with a
// cycle (3) or a crossing path (4); one endpoint glued and p avoiding alpha
// (5), ending in alpha (6), or passing through alpha inside a cycle (7).
struct SpecialPair {
  int arrow = -1;   // A arrow index
  int path = -1;    // A basis index of p
  int b_pair = -1;  // index of alpha* || p* in cB.a_pairs (not injective:
                    // the two trivial paths share one image)
  int kind = 0;     // 1..7
};

struct SpecialPairs {
  std::vector<SpecialPair> pairs;
  std::vector<int> kind_counts;  // size 8, index by kind
  int count() const { return static_cast<int>(pairs.size()); }
};

SpecialPairs special_pairs(const Presentation& A, const Gluing& g,
                           const CmonComplex& cB);

// Shape of a gluing instance, used to select which statements apply.
struct GluingShape {
  bool same_block = false;   // e1 and en lie in one component of A
  bool source_sink = false;  // e1 is a source and en is a sink of A
  int c_A = 0, c_B = 0;
};

GluingShape gluing_shape(const Presentation& A, const Gluing& g);

// Characteristic assumption: for every loop at e1 or en whose m-th power is
// a relation, char k must not divide m.
struct AssumptionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

AssumptionReport check_assumption(const Presentation& A, int e1, int en,
                                  const FieldSpec& field);

// --- field-level spans attached to a gluing -----------------------------------

// Z_sp: span of d0_B(f1 || p*) over special p (in cB.a_pairs coordinates).
template <class F>
Subspace<F> z_sp(const F& K, const Gluing& g, const CmonComplex& cB,
                 const SpecialPaths& sp, const Presentation& A) {
  Echelon<F> e(K, cB.a_pairs.size());
  for (int b : sp.special) {
    Path q = star_path(g, A.basis()[b]);
    int vp = cB.v_pairs.index_of(g.f1, *g.B.basis_index(q));
    e.insert(svec_from_int(K, cB.d0.cols[vp]));
  }
  return subspace_from_echelon(e);
}

// Z_nsp: span of f1 || p* over nonspecial p (in cB.v_pairs coordinates).
template <class F>
Subspace<F> z_nsp(const F& K, const Gluing& g, const CmonComplex& cB,
                  const SpecialPaths& sp, const Presentation& A) {
  Echelon<F> e(K, cB.v_pairs.size());
  for (int b : sp.nonspecial) {
    Path q = star_path(g, A.basis()[b]);
    e.insert(svec_unit(K, cB.v_pairs.index_of(g.f1, *g.B.basis_index(q))));
  }
  return subspace_from_echelon(e);
}

// Z_spp: the special-pair span intersected with the degree-one cocycles.
template <class F>
Subspace<F> z_spp(const F& K, const CmonComplex& cB, const SpecialPairs& spp,
                  const Subspace<F>& ker_d1_B) {
  Echelon<F> e(K, cB.a_pairs.size());
  for (const auto& s : spp.pairs) e.insert(svec_unit(K, s.b_pair));
  return subspace_intersect(K, subspace_from_echelon(e), ker_d1_B);
}

}  // namespace qhh
