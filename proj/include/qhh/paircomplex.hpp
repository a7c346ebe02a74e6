// The parallel-pair cochain complex of a monomial presentation:
//
//   k(Q0 || B)  --d0-->  k(Q1 || B)  --d1-->  k(Z || B)
//
// where B is the monomial basis and x || p ranges over parallel pairs
// (s(x) = s(p), t(x) = t(p)).  H^0 is the center of the algebra, H^1 its
// outer-derivation Lie algebra in degree-one coordinates.  Differentials are
// integer matrices; all field-dependent analysis happens downstream.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhh/linalg.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

// An ordered list of pairs (left, basis path index); `left` indexes vertices,
// arrows or relations depending on the space.
struct PairSpace {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pos;

  int size() const { return static_cast<int>(pairs.size()); }
  int index_of(int left, int b) const {
    auto it = pos.find({left, b});
    return it == pos.end() ? -1 : it->second;
  }
  void push(int left, int b) {
    pos.emplace(std::make_pair(left, b), size());
    pairs.emplace_back(left, b);
  }
};

// Substitution: replace one occurrence of `arrow` in q by gamma (parallel to
// the arrow), one occurrence at a time; results that leave the monomial basis
// are dropped.  Coefficients over basis indices.
IntVec substitute(const Presentation& pres, const Path& q, int arrow,
                  const Path& gamma);

struct CmonComplex {
  const Presentation* pres = nullptr;
  PairSpace v_pairs;  // Q0 || B
  PairSpace a_pairs;  // Q1 || B
  PairSpace r_pairs;  // Z  || B
  IntMat d0;          // v_pairs -> a_pairs
  IntMat d1;          // a_pairs -> r_pairs

  // Weight of a pair (length of the right path minus length of the left
  // side); both differentials are homogeneous of weight 0.
  int v_weight(int i) const;
  int a_weight(int i) const;

  std::string render_v(int i) const;
  std::string render_a(int i) const;
};

// The complex keeps a pointer to the presentation, so the presentation must
// outlive it; passing a temporary is rejected at compile time.
CmonComplex build_cmon(const Presentation& pres);
CmonComplex build_cmon(Presentation&&) = delete;

// Pretty-print a vector over a pair space ("a||p - 2*b||q"); field
// coefficients rendered by F::str, unit coefficients elided.
template <class F>
std::string render_vec(const F& K, const CmonComplex& c, bool arrow_space,
                       const SVec<F>& v) {
  std::string out;
  for (const auto& [i, e] : v) {
    std::string coeff = K.str(e);
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != "1") out += mag + "*";
    out += arrow_space ? c.render_a(i) : c.render_v(i);
  }
  return out.empty() ? "0" : out;
}

// --- field-level analysis ----------------------------------------------------

template <class F>
struct CmonAnalysis {
  Subspace<F> ker_d0;    // center coordinates in v_pairs
  Subspace<F> ker_d1;    // degree-one cocycles in a_pairs
  Subspace<F> im_d0;     // coboundaries in a_pairs
  Subspace<F> hh1_reps;  // canonical coset representatives, in a_pairs
  int hh0_dim = 0;
  int hh1_dim = 0;
};

template <class F>
CmonAnalysis<F> analyze_cmon(const F& K, const CmonComplex& c) {
  CmonAnalysis<F> out;
  out.ker_d0 = kernel(K, c.d0);
  auto ki = kernel_image(K, c.d1);
  out.ker_d1 = std::move(ki.kernel);
  out.im_d0 = image(K, c.d0);
  out.hh1_reps = quotient_reps(K, out.ker_d1, out.im_d0);
  out.hh0_dim = out.ker_d0.dim();
  out.hh1_dim = out.hh1_reps.dim();
  return out;
}

// The center as a subspace of the algebra itself (coordinates over the
// monomial basis; e||p maps to p, so the identity is the sum of the trivial
// paths).
template <class F>
Subspace<F> center_in_algebra(const F& K, const CmonComplex& c,
                              const Subspace<F>& ker_d0) {
  IntMat inj(c.pres->dim(), c.v_pairs.size());
  for (int i = 0; i < c.v_pairs.size(); ++i)
    inj.set_col(i, IntVec{{c.v_pairs.pairs[i].second, 1}});
  return map_subspace(K, inj, ker_d0);
}

// One weight-graded piece of H^1: cocycles of that weight modulo the
// coboundaries of the same weight, with representatives in a_pairs
// coordinates.
template <class F>
struct GradedPiece {
  int weight = 0;
  Subspace<F> reps;  // in a_pairs coordinates
  int dim() const { return reps.dim(); }
};

template <class F>
std::vector<GradedPiece<F>> graded_pieces(const F& K, const CmonComplex& c) {
  int maxw = 0;
  for (int i = 0; i < c.a_pairs.size(); ++i)
    maxw = std::max(maxw, c.a_weight(i));
  std::vector<GradedPiece<F>> out;
  for (int w = -1; w <= maxw; ++w) {
    // Cocycles of weight w: kernel of d1 restricted to that weight block.
    Echelon<F> cocyc(K, c.a_pairs.size());
    {
      // Columns of weight w, eliminated with augmentation to read the kernel.
      std::vector<int> cols;
      for (int i = 0; i < c.a_pairs.size(); ++i)
        if (c.a_weight(i) == w) cols.push_back(i);
      Echelon<F> e(K, c.r_pairs.size() + c.a_pairs.size());
      for (int j : cols) {
        SVec<F> row = svec_from_int(K, c.d1.cols[j]);
        row.emplace_back(c.r_pairs.size() + j, K.one());
        e.insert(std::move(row));
      }
      for (const auto& row : e.sorted_rows()) {
        if (row.empty() || row.front().first < c.r_pairs.size()) continue;
        SVec<F> right;
        for (const auto& [i, x] : row)
          right.emplace_back(i - c.r_pairs.size(), x);
        cocyc.insert(std::move(right));
      }
    }
    // Coboundaries of weight w.
    Echelon<F> cob(K, c.a_pairs.size());
    for (int j = 0; j < c.v_pairs.size(); ++j)
      if (c.v_weight(j) == w) cob.insert(svec_from_int(K, c.d0.cols[j]));
    GradedPiece<F> piece;
    piece.weight = w;
    piece.reps = quotient_reps(K, subspace_from_echelon(cocyc),
                               subspace_from_echelon(cob));
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace qhh
