// Lie structure on degree-one cocycles and cohomology.
//
// The bracket of parallel pairs is substitution in both directions:
//   [a||g, b||e] = b||e^{a->g} - a||g^{b->e}.
// It restricts to cocycles, descends to H^1, and in characteristic p carries
// the p-power operation (p-fold composition of a lifted derivation).
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qhh/errors.hpp"
#include "qhh/paircomplex.hpp"

namespace qhh {

// Memoized brackets of pair-space basis elements, integer coefficients.
class BracketCache {
 public:
  explicit BracketCache(const CmonComplex& c) : c_(&c) {}
  explicit BracketCache(CmonComplex&&) = delete;  // must outlive the cache
  const IntVec& pair_bracket(int i, int j);

 private:
  const CmonComplex* c_;
  std::map<std::pair<int, int>, IntVec> memo_;
};

template <class F>
SVec<F> bracket_vec(const F& K, BracketCache& bc, const SVec<F>& u,
                    const SVec<F>& v) {
  SVec<F> acc;
  for (const auto& [i, ci] : u)
    for (const auto& [j, cj] : v) {
      auto coeff = K.mul(ci, cj);
      if (K.is_zero(coeff)) continue;
      acc = svec_axpy(K, acc, coeff,
                      svec_from_int(K, bc.pair_bracket(i, j)));
    }
  return acc;
}

// --- abstract Lie algebras by structure constants -----------------------------

template <class F>
struct LieAlgebra {
  int d = 0;
  // table[i][j] = [e_i, e_j] in basis coordinates.
  std::vector<std::vector<SVec<F>>> table;

  SVec<F> bracket(const F& K, const SVec<F>& u, const SVec<F>& v) const {
    SVec<F> acc;
    for (const auto& [i, ci] : u)
      for (const auto& [j, cj] : v) {
        auto coeff = K.mul(ci, cj);
        if (!K.is_zero(coeff)) acc = svec_axpy(K, acc, coeff, table[i][j]);
      }
    return acc;
  }
};

// Invariants used to compare Lie algebras without an isomorphism search.
// Series are dimension sequences starting at the full dimension and ending
// at the first repeated value (so a terminal nonzero value means "stable").
struct LieProfile {
  int dim = 0;
  int center_dim = 0;
  int derived_subalgebra_dim = 0;
  std::vector<int> derived_series;
  std::vector<int> lower_central_series;
  bool solvable = false;
  bool nilpotent = false;
  bool abelian = false;
  bool operator==(const LieProfile&) const = default;
};

std::string profile_str(const LieProfile& p);

template <class F>
LieProfile lie_profile(const F& K, const LieAlgebra<F>& L) {
  LieProfile out;
  out.dim = L.d;

  // Center: common kernel of all ad(e_j).
  {
    std::vector<SVec<F>> cols(L.d);
    for (int i = 0; i < L.d; ++i) {
      SVec<F> stacked;
      for (int j = 0; j < L.d; ++j)
        for (const auto& [k, c] : L.table[i][j])
          stacked.emplace_back(j * L.d + k, c);
      // Coordinates already sorted: (j,k) grows with j, k within j.
      cols[i] = std::move(stacked);
    }
    out.center_dim = kernel_of_columns(K, L.d * L.d, cols).dim();
  }

  auto bracket_span = [&](const Subspace<F>& U, const Subspace<F>& V) {
    Echelon<F> e(K, L.d);
    for (const auto& u : U.basis)
      for (const auto& v : V.basis) e.insert(L.bracket(K, u, v));
    return subspace_from_echelon(e);
  };
  Subspace<F> full;
  full.ambient = L.d;
  {
    Echelon<F> e(K, L.d);
    for (int i = 0; i < L.d; ++i) e.insert(svec_unit(K, i));
    full = subspace_from_echelon(e);
  }

  auto run_series = [&](bool lower_central) {
    std::vector<int> dims{L.d};
    Subspace<F> cur = full;
    while (true) {
      Subspace<F> nxt =
          lower_central ? bracket_span(full, cur) : bracket_span(cur, cur);
      dims.push_back(nxt.dim());
      if (nxt.dim() == cur.dim() || nxt.dim() == 0) break;
      cur = std::move(nxt);
    }
    return dims;
  };
  out.derived_series = run_series(false);
  out.lower_central_series = run_series(true);
  out.derived_subalgebra_dim =
      out.derived_series.size() > 1 ? out.derived_series[1] : 0;
  out.solvable = out.derived_series.back() == 0;
  out.nilpotent = out.lower_central_series.back() == 0;
  out.abelian = out.derived_subalgebra_dim == 0;
  return out;
}

// gl_n with basis E_{ij} (row-major): [E_ij, E_kl] = d_jk E_il - d_li E_kj.
template <class F>
LieAlgebra<F> abstract_gl(const F& K, int n) {
  LieAlgebra<F> L;
  L.d = n * n;
  L.table.assign(L.d, std::vector<SVec<F>>(L.d));
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          SVec<F> v;
          if (j == k) v = svec_axpy(K, v, K.one(), svec_unit(K, idx(i, l)));
          if (l == i)
            v = svec_axpy(K, v, K.neg(K.one()), svec_unit(K, idx(k, j)));
          L.table[idx(i, j)][idx(k, l)] = std::move(v);
        }
  return L;
}

// sl_n as the trace-zero subalgebra of gl_n (basis: off-diagonal E_ij plus
// H_i = E_ii - E_{i+1,i+1}); computed by restricting gl_n.
template <class F>
LieAlgebra<F> abstract_sl(const F& K, int n);

template <class F>
LieAlgebra<F> abelian_lie(const F& K, int n) {
  (void)K;
  LieAlgebra<F> L;
  L.d = n;
  L.table.assign(n, std::vector<SVec<F>>(n));
  return L;
}

template <class F>
LieAlgebra<F> direct_sum(const F& K, const LieAlgebra<F>& A,
                         const LieAlgebra<F>& B) {
  (void)K;
  LieAlgebra<F> L;
  L.d = A.d + B.d;
  L.table.assign(L.d, std::vector<SVec<F>>(L.d));
  for (int i = 0; i < A.d; ++i)
    for (int j = 0; j < A.d; ++j) L.table[i][j] = A.table[i][j];
  for (int i = 0; i < B.d; ++i)
    for (int j = 0; j < B.d; ++j) {
      SVec<F> v;
      for (const auto& [k, c] : B.table[i][j]) v.emplace_back(k + A.d, c);
      L.table[i + A.d][j + A.d] = std::move(v);
    }
  return L;
}

// --- Lie algebra carried by a subquotient of the pair space -------------------

// Structure constants of span(reps) / span(mod), where both live in a_pairs
// coordinates, span(mod) is bracket-stable against reps (an ideal situation),
// and reps are canonical coset representatives in RREF.
template <class F>
LieAlgebra<F> subquotient_lie(const F& K, const CmonComplex& c,
                              BracketCache& bc, const Subspace<F>& reps,
                              const Subspace<F>& mod) {
  LieAlgebra<F> L;
  L.d = reps.dim();
  L.table.assign(L.d, std::vector<SVec<F>>(L.d));
  auto emod = mod.echelon(K);
  auto ereps = reps.echelon(K);
  auto pivots = ereps.pivots();
  for (int i = 0; i < L.d; ++i)
    for (int j = 0; j < L.d; ++j) {
      SVec<F> b = bracket_vec(K, bc, reps.basis[i], reps.basis[j]);
      SVec<F> red = emod.reduce(std::move(b));
      // Express in rep coordinates by reading pivot entries.
      SVec<F> coords;
      for (int k = 0; k < L.d; ++k) {
        auto e = svec_coeff(K, red, pivots[k]);
        if (e) coords.emplace_back(k, *e);
      }
      // Consistency: the residual must lie in span(reps).
      SVec<F> check = red;
      for (const auto& [k, e] : coords)
        check = svec_axpy(K, check, K.neg(e), reps.basis[k]);
      if (!check.empty())
        throw IdentityError(
            "bracket left the subquotient: representatives do not close");
      L.table[i][j] = std::move(coords);
    }
  return L;
}

// H^1 as a Lie algebra in the canonical representative basis.
template <class F>
LieAlgebra<F> hh1_lie(const F& K, const CmonComplex& c, BracketCache& bc,
                      const CmonAnalysis<F>& an) {
  return subquotient_lie(K, c, bc, an.hh1_reps, an.im_d0);
}

// --- weight-zero component ----------------------------------------------------

// Basis description of the weight-zero component per parallel class, the
// product decomposition, and the center construction from class adjacency.
struct L0Class {
  std::vector<int> arrows;                        // the parallel class
  std::vector<std::pair<int, int>> offdiag;       // cocycle pairs (a, b), a!=b
  std::vector<std::pair<int, int>> diagonal_diff; // (a_i, a_last), i < last
  bool has_cycle_diagonal = false;                // contributes a_last||a_last
  int block_dim = 0;
};

struct L0Decomposition {
  std::vector<L0Class> classes;
  int chi_reduced = 0;   // number of cycle-chosen diagonals
  int dim = 0;           // dim of the weight-zero component
  int center_dim = 0;    // via the component construction
  std::vector<std::string> center_rendered;
};

// --- predictions for radical-square-zero comparisons --------------------------

struct SfPrediction {
  std::vector<int> class_sizes;  // nontrivial parallel classes, >= 2 each
  int chi_reduced = 0;
  int dim = 0;  // sum (size^2 - 1) + chi_reduced
};

SfPrediction sf_prediction(const Presentation& pres);

template <class F>
LieAlgebra<F> sf_model(const F& K, const SfPrediction& p) {
  LieAlgebra<F> L = abelian_lie(K, p.chi_reduced);
  for (int s : p.class_sizes) L = direct_sum(K, L, abstract_sl(K, s));
  return L;
}

// --- p-power ------------------------------------------------------------------

// The restricted p-th power of a degree-one class in characteristic p:
// lift to a derivation, extend by Leibniz to the monomial basis, compose
// p times, restrict to arrows and reduce modulo coboundaries.
template <class F>
SVec<F> p_power_class(const F& K, const CmonComplex& c,
                      const CmonAnalysis<F>& an, const SVec<F>& rep);

// Full table: p-power of each canonical H^1 representative, reported in
// ambient a_pairs coordinates (already reduced mod coboundaries).
template <class F>
std::vector<SVec<F>> p_power_table(const F& K, const CmonComplex& c,
                                   const CmonAnalysis<F>& an) {
  std::vector<SVec<F>> out;
  for (const auto& rep : an.hh1_reps.basis)
    out.push_back(p_power_class(K, c, an, rep));
  return out;
}

// --- implementation details (templates) ---------------------------------------

template <class F>
LieAlgebra<F> abstract_sl(const F& K, int n) {
  LieAlgebra<F> gl = abstract_gl(K, n);
  // Basis rows of the trace-zero subspace inside gl_n coordinates.
  Echelon<F> e(K, n * n);
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.insert(svec_unit(K, idx(i, j)));
  for (int i = 0; i + 1 < n; ++i) {
    SVec<F> h;
    h = svec_axpy(K, h, K.one(), svec_unit(K, idx(i, i)));
    h = svec_axpy(K, h, K.neg(K.one()), svec_unit(K, idx(i + 1, i + 1)));
    e.insert(std::move(h));
  }
  Subspace<F> reps = subspace_from_echelon(e);
  Subspace<F> zero;
  zero.ambient = n * n;
  // Reuse the subquotient machinery against the gl table.
  LieAlgebra<F> L;
  L.d = reps.dim();
  L.table.assign(L.d, std::vector<SVec<F>>(L.d));
  auto ereps = reps.echelon(K);
  auto pivots = ereps.pivots();
  for (int i = 0; i < L.d; ++i)
    for (int j = 0; j < L.d; ++j) {
      SVec<F> b = gl.bracket(K, reps.basis[i], reps.basis[j]);
      SVec<F> coords;
      for (int k = 0; k < L.d; ++k) {
        auto c = svec_coeff(K, b, pivots[k]);
        if (c) coords.emplace_back(k, *c);
      }
      SVec<F> check = b;
      for (const auto& [k, c] : coords)
        check = svec_axpy(K, check, K.neg(c), reps.basis[k]);
      if (!check.empty()) throw IdentityError("sl_n closure failed");
      L.table[i][j] = std::move(coords);
    }
  return L;
}

template <class F>
L0Decomposition l0_decomposition(const F& K, const CmonComplex& c) {
  const Presentation& pres = *c.pres;
  const Quiver& q = pres.quiver();
  L0Decomposition out;

  // Coboundary span of the trivial-path pairs (the weight-zero relations).
  Echelon<F> cob(K, c.a_pairs.size());
  for (int j = 0; j < c.v_pairs.size(); ++j)
    if (c.v_weight(j) == 0) cob.insert(svec_from_int(K, c.d0.cols[j]));

  auto arrow_pair = [&](int a, int b_arrow) {
    // index of a || b in a_pairs, where b is an arrow (basis path length 1).
    Path pb;
    pb.arrows = {b_arrow};
    return c.a_pairs.index_of(a, *pres.basis_index(pb));
  };
  auto is_cocycle = [&](int a, int b_arrow) {
    return c.d1.cols[arrow_pair(a, b_arrow)].empty();
  };

  auto classes = q.parallel_classes();
  auto nontree = q.nontree_parallel_classes();
  std::vector<bool> chosen(classes.size(), false);
  for (const auto& nt : nontree)
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
      if (classes[ci] == nt) chosen[ci] = true;
  out.chi_reduced = static_cast<int>(nontree.size());

  Echelon<F> all_items(K, c.a_pairs.size());
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    L0Class cls;
    cls.arrows = classes[ci];
    for (int a : cls.arrows)
      for (int b : cls.arrows)
        if (a != b && is_cocycle(a, b)) cls.offdiag.emplace_back(a, b);
    int last = cls.arrows.back();
    for (std::size_t i = 0; i + 1 < cls.arrows.size(); ++i)
      cls.diagonal_diff.emplace_back(cls.arrows[i], last);
    cls.has_cycle_diagonal = chosen[ci];
    cls.block_dim = static_cast<int>(cls.offdiag.size()) +
                    static_cast<int>(cls.diagonal_diff.size()) +
                    (cls.has_cycle_diagonal ? 1 : 0);
    // Accumulate the residuals: items must be independent mod coboundaries.
    auto item_vec = [&](int a, int b) {
      return svec_from_int(K, IntVec{{arrow_pair(a, b), 1}});
    };
    for (auto [a, b] : cls.offdiag) all_items.insert(cob.reduce(item_vec(a, b)));
    for (auto [a, b] : cls.diagonal_diff)
      all_items.insert(cob.reduce(
          svec_axpy(K, item_vec(a, a), K.neg(K.one()), item_vec(b, b))));
    if (cls.has_cycle_diagonal)
      all_items.insert(cob.reduce(item_vec(last, last)));
    out.classes.push_back(std::move(cls));
  }
  out.dim = all_items.rank();

  // Center construction: per class, components of the graph on its arrows
  // with a ~ b iff a||b or b||a is a cocycle; candidate generator is the
  // component's diagonal sum, kept iff it lies in its class block (mod
  // coboundaries).
  Echelon<F> center(K, c.a_pairs.size());
  std::vector<std::string> rendered;
  for (const auto& cls : out.classes) {
    int n = static_cast<int>(cls.arrows.size());
    // Block span: the class items plus coboundaries.
    Echelon<F> block(K, c.a_pairs.size());
    auto item_vec = [&](int a, int b) {
      return svec_from_int(K, IntVec{{arrow_pair(a, b), 1}});
    };
    for (auto [a, b] : cls.offdiag) block.insert(item_vec(a, b));
    for (auto [a, b] : cls.diagonal_diff)
      block.insert(
          svec_axpy(K, item_vec(a, a), K.neg(K.one()), item_vec(b, b)));
    if (cls.has_cycle_diagonal)
      block.insert(item_vec(cls.arrows.back(), cls.arrows.back()));
    for (int j = 0; j < c.v_pairs.size(); ++j)
      if (c.v_weight(j) == 0) block.insert(svec_from_int(K, c.d0.cols[j]));

    // Components under the adjacency.
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = nc;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y)
          if (comp[y] < 0 && (is_cocycle(cls.arrows[x], cls.arrows[y]) ||
                              is_cocycle(cls.arrows[y], cls.arrows[x]))) {
            comp[y] = nc;
            stack.push_back(y);
          }
      }
      ++nc;
    }
    for (int k = 0; k < nc; ++k) {
      SVec<F> cand;
      for (int x = 0; x < n; ++x)
        if (comp[x] == k)
          cand = svec_axpy(K, cand, K.one(),
                           item_vec(cls.arrows[x], cls.arrows[x]));
      if (!block.contains(cand)) continue;
      if (center.insert(cob.reduce(cand)))
        rendered.push_back(render_vec(K, c, true, cand));
    }
  }
  out.center_dim = center.rank();
  out.center_rendered = std::move(rendered);
  return out;
}

template <class F>
SVec<F> p_power_class(const F& K, const CmonComplex& c,
                      const CmonAnalysis<F>& an, const SVec<F>& rep) {
  if (K.characteristic() == 0)
    throw SemanticError("p-power map requires positive characteristic");
  const Presentation& pres = *c.pres;
  int p = static_cast<int>(K.characteristic());
  int dim = pres.dim();

  // Derivation matrix on the monomial basis (column per basis path).
  std::vector<SVec<F>> M(dim);
  for (int b = 0; b < dim; ++b) {
    const Path& path = pres.basis()[b];
    SVec<F> col;
    for (const auto& [pi, coeff] : rep) {
      auto [a, g] = c.a_pairs.pairs[pi];
      IntVec terms = substitute(pres, path, a, pres.basis()[g]);
      col = svec_axpy(K, col, coeff, svec_from_int(K, terms));
    }
    M[b] = std::move(col);
  }
  // p-fold composition.
  std::vector<SVec<F>> P = M;
  for (int t = 1; t < p; ++t) {
    std::vector<SVec<F>> nxt(dim);
    for (int b = 0; b < dim; ++b) {
      SVec<F> acc;
      for (const auto& [k, e] : P[b]) acc = svec_axpy(K, acc, e, M[k]);
      nxt[b] = std::move(acc);
    }
    P = std::move(nxt);
  }
  // Restrict to arrows.
  SVec<F> vec;
  for (int a = 0; a < pres.quiver().n_arrows(); ++a) {
    Path pa;
    pa.arrows = {a};
    int b = *pres.basis_index(pa);
    for (const auto& [g, e] : P[b]) {
      int pi = c.a_pairs.index_of(a, g);
      if (pi < 0)
        throw IdentityError("p-power image is not a parallel pair vector");
      vec = svec_axpy(K, vec, e, svec_unit(K, pi));
    }
  }
  // A p-th power of a derivation is again a derivation: stays a cocycle.
  if (!map_vec(K, c.d1, vec).empty())
    throw IdentityError("p-power image is not a cocycle");
  return an.im_d0.echelon(K).reduce(vec);
}

}  // namespace qhh
