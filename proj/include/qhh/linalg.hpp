// Exact sparse linear algebra over Q and F_p.
//
// Matrices arising from the cochain complexes in this library always have
// small integer entries, so they are built field-independently (IntMat) and
// mapped into a coefficient field at elimination time.  Subspaces are kept in
// reduced row echelon form, which is unique per subspace: equality,
// containment and quotient representatives are therefore canonical and
// deterministic, and recomputing a space always yields the identical basis.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhh/field.hpp"

namespace qhh {

// ---------------------------------------------------------------------------
// Integer carriers (complex differentials, psi maps, span generators).
// ---------------------------------------------------------------------------

// Sparse integer vector: sorted (index, coefficient) pairs, coefficients != 0.
using IntVec = std::vector<std::pair<int, long long>>;

inline void intvec_add_term(IntVec& v, int idx, long long c) {
  // Terms are accumulated unsorted via this helper then normalized once.
  v.emplace_back(idx, c);
}

// Sorts by index, merges duplicates, drops zeros.
inline IntVec intvec_normalize(IntVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  IntVec out;
  for (const auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  return out;
}

// Sparse column-major integer matrix; column j holds the image of the j-th
// domain basis vector.
struct IntMat {
  int nrows = 0;
  int ncols = 0;
  std::vector<IntVec> cols;

  IntMat() = default;
  IntMat(int r, int c) : nrows(r), ncols(c), cols(c) {}

  void set_col(int j, IntVec v) { cols[j] = intvec_normalize(std::move(v)); }

  // y = M x over the integers.
  IntVec apply(const IntVec& x) const {
    IntVec acc;
    for (const auto& [j, c] : x)
      for (const auto& [i, m] : cols[j]) acc.emplace_back(i, m * c);
    return intvec_normalize(std::move(acc));
  }

  bool is_zero() const {
    for (const auto& col : cols)
      if (!col.empty()) return false;
    return true;
  }

  // Composite this∘other (apply other first), exact integer arithmetic.
  IntMat compose(const IntMat& other) const {
    if (nrows == 0 || other.ncols == 0 || ncols != other.nrows)
      assert(ncols == other.nrows);
    IntMat out(nrows, other.ncols);
    for (int j = 0; j < other.ncols; ++j) out.cols[j] = apply(other.cols[j]);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Sparse field vectors.
// ---------------------------------------------------------------------------

template <class F>
using SVec = std::vector<std::pair<int, typename F::Elem>>;  // sorted, nonzero

template <class F>
SVec<F> svec_from_int(const F& K, const IntVec& v) {
  SVec<F> out;
  for (const auto& [i, c] : v) {
    auto e = K.from_int(c);
    if (!K.is_zero(e)) out.emplace_back(i, e);
  }
  return out;
}

template <class F>
SVec<F> svec_unit(const F& K, int idx) {
  return SVec<F>{{idx, K.one()}};
}

// dst + c * src, merged.
template <class F>
SVec<F> svec_axpy(const F& K, const SVec<F>& dst, const typename F::Elem& c,
                  const SVec<F>& src) {
  SVec<F> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      auto e = K.mul(c, src[j].second);
      if (!K.is_zero(e)) out.emplace_back(src[j].first, e);
      ++j;
    } else {
      auto e = K.add(dst[i].second, K.mul(c, src[j].second));
      if (!K.is_zero(e)) out.emplace_back(dst[i].first, e);
      ++i, ++j;
    }
  }
  return out;
}

template <class F>
SVec<F> svec_scale(const F& K, const SVec<F>& v, const typename F::Elem& c) {
  SVec<F> out;
  if (K.is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& [i, e] : v) out.emplace_back(i, K.mul(c, e));
  return out;
}

template <class F>
std::optional<typename F::Elem> svec_coeff(const F& K, const SVec<F>& v, int idx) {
  auto it = std::lower_bound(
      v.begin(), v.end(), idx,
      [](const auto& a, int b) { return a.first < b; });
  if (it != v.end() && it->first == idx) return it->second;
  (void)K;
  return std::nullopt;
}

template <class F>
bool svec_equal(const F& K, const SVec<F>& a, const SVec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !K.equal(a[i].second, b[i].second))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Incremental reduced row echelon form.
// ---------------------------------------------------------------------------

// Maintains a reduced echelon basis (Gauss–Jordan: every pivot column is
// cleared in all other rows, pivots are scaled to 1).  Rows may be fed one at
// a time; at any moment rows() is the unique RREF basis of the span so far.
template <class F>
class Echelon {
 public:
  Echelon(const F& K, int width) : K_(&K), width_(width) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Fully reduces v by the current rows; returns the residual.
  SVec<F> reduce(SVec<F> v) const {
    SVec<F> out = std::move(v);
    // Repeatedly eliminate the leading coordinate while it matches a pivot.
    for (std::size_t k = 0; k < out.size();) {
      auto it = pivot_row_.find(out[k].first);
      if (it == pivot_row_.end()) {
        ++k;  // not a pivot column anywhere: keep and move on
        continue;
      }
      auto c = K_->neg(out[k].second);
      out = svec_axpy(*K_, out, c, rows_[it->second]);
      // out lost coordinate out[k]; positions before k are non-pivot columns
      // already checked, so continue from k.
    }
    return out;
  }

  bool contains(const SVec<F>& v) const { return reduce(v).empty(); }

  // Inserts v into the span. Returns the new pivot column, or nullopt if v
  // was already in the span.
  std::optional<int> insert(SVec<F> v) {
    SVec<F> r = reduce(std::move(v));
    if (r.empty()) return std::nullopt;
    int piv = r.front().first;
    r = svec_scale(*K_, r, K_->inv(r.front().second));
    // Back-eliminate the new pivot from existing rows (keeps RREF invariant).
    for (auto& row : rows_) {
      auto c = svec_coeff(*K_, row, piv);
      if (c) row = svec_axpy(*K_, row, K_->neg(*c), r);
    }
    pivot_row_.emplace(piv, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(r));
    return piv;
  }

  // Rows sorted by pivot column: the canonical RREF basis.
  std::vector<SVec<F>> sorted_rows() const {
    std::vector<SVec<F>> out;
    out.reserve(rows_.size());
    for (const auto& [piv, idx] : pivot_row_) out.push_back(rows_[idx]);
    return out;  // pivot_row_ is an ordered map: ascending pivots
  }

  std::vector<int> pivots() const {
    std::vector<int> out;
    out.reserve(pivot_row_.size());
    for (const auto& [piv, idx] : pivot_row_) out.push_back(piv);
    return out;
  }

 private:
  const F* K_;
  int width_;
  std::vector<SVec<F>> rows_;      // insertion order
  std::map<int, int> pivot_row_;   // pivot column -> index into rows_
};

// ---------------------------------------------------------------------------
// Subspaces (canonical RREF bases).
// ---------------------------------------------------------------------------

template <class F>
struct Subspace {
  int ambient = 0;
  std::vector<SVec<F>> basis;  // RREF rows, ascending pivots

  int dim() const { return static_cast<int>(basis.size()); }

  Echelon<F> echelon(const F& K) const {
    Echelon<F> e(K, ambient);
    for (const auto& row : basis) e.insert(row);
    return e;
  }
};

template <class F>
Subspace<F> subspace_from_echelon(const Echelon<F>& e) {
  return Subspace<F>{e.width(), e.sorted_rows()};
}

template <class F>
Subspace<F> span_of(const F& K, int ambient, const std::vector<SVec<F>>& gens) {
  Echelon<F> e(K, ambient);
  for (const auto& g : gens) e.insert(g);
  return subspace_from_echelon(e);
}

template <class F>
Subspace<F> span_of_int(const F& K, int ambient, const std::vector<IntVec>& gens) {
  Echelon<F> e(K, ambient);
  for (const auto& g : gens) e.insert(svec_from_int(K, g));
  return subspace_from_echelon(e);
}

template <class F>
bool subspace_contains(const F& K, const Subspace<F>& U, const SVec<F>& v) {
  return U.echelon(K).contains(v);
}

template <class F>
bool subspace_leq(const F& K, const Subspace<F>& U, const Subspace<F>& V) {
  auto e = V.echelon(K);
  for (const auto& row : U.basis)
    if (!e.contains(row)) return false;
  return true;
}

template <class F>
bool subspace_equal(const F& K, const Subspace<F>& U, const Subspace<F>& V) {
  if (U.ambient != V.ambient || U.dim() != V.dim()) return false;
  for (int i = 0; i < U.dim(); ++i)
    if (!svec_equal(K, U.basis[i], V.basis[i])) return false;
  return true;
}

template <class F>
Subspace<F> subspace_sum(const F& K, const Subspace<F>& U, const Subspace<F>& V) {
  if (U.ambient != V.ambient) throw std::invalid_argument("ambient mismatch");
  Echelon<F> e(K, U.ambient);
  for (const auto& r : U.basis) e.insert(r);
  for (const auto& r : V.basis) e.insert(r);
  return subspace_from_echelon(e);
}

// Zassenhaus: rows [u|u] for u in U and [v|0] for v in V; eliminated rows
// whose left half vanished carry U∩V in their right half.
template <class F>
Subspace<F> subspace_intersect(const F& K, const Subspace<F>& U,
                               const Subspace<F>& V) {
  if (U.ambient != V.ambient) throw std::invalid_argument("ambient mismatch");
  int n = U.ambient;
  Echelon<F> e(K, 2 * n);
  for (const auto& u : U.basis) {
    SVec<F> w;
    w.reserve(2 * u.size());
    for (const auto& [i, c] : u) w.emplace_back(i, c);
    for (const auto& [i, c] : u) w.emplace_back(i + n, c);
    e.insert(std::move(w));
  }
  for (const auto& v : V.basis) e.insert(v);  // [v | 0]
  Echelon<F> inter(K, n);
  for (const auto& row : e.sorted_rows()) {
    if (row.empty() || row.front().first < n) continue;
    SVec<F> right;
    right.reserve(row.size());
    for (const auto& [i, c] : row) right.emplace_back(i - n, c);
    inter.insert(std::move(right));
  }
  return subspace_from_echelon(inter);
}

// Canonical coset representatives of U modulo W (requires W ⊆ U): residuals
// of U's basis after reduction by W, re-echelonized.
template <class F>
Subspace<F> quotient_reps(const F& K, const Subspace<F>& U, const Subspace<F>& W) {
  if (U.ambient != W.ambient) throw std::invalid_argument("ambient mismatch");
  auto ew = W.echelon(K);
  auto eu = U.echelon(K);
  for (const auto& w : W.basis)
    if (!eu.contains(w)) throw std::invalid_argument("W is not contained in U");
  Echelon<F> reps(K, U.ambient);
  for (const auto& u : U.basis) reps.insert(ew.reduce(u));
  return subspace_from_echelon(reps);
}

// ---------------------------------------------------------------------------
// Kernel and image of an integer matrix over a chosen field.
// ---------------------------------------------------------------------------

template <class F>
struct KernelImage {
  Subspace<F> kernel;  // subspace of the domain
  Subspace<F> image;   // subspace of the codomain
};

// Single elimination of the augmented rows [col_j(M) | e_j]: rows that end up
// supported only in the augmentation give kernel coordinates; the left parts
// of the remaining rows give the canonical image basis.
template <class F>
KernelImage<F> kernel_image(const F& K, const IntMat& M) {
  Echelon<F> e(K, M.nrows + M.ncols);
  for (int j = 0; j < M.ncols; ++j) {
    SVec<F> row = svec_from_int(K, M.cols[j]);
    row.emplace_back(M.nrows + j, K.one());
    e.insert(std::move(row));
  }
  Echelon<F> ker(K, M.ncols);
  Echelon<F> img(K, M.nrows);
  for (const auto& row : e.sorted_rows()) {
    if (row.empty()) continue;
    if (row.front().first >= M.nrows) {
      SVec<F> right;
      right.reserve(row.size());
      for (const auto& [i, c] : row) right.emplace_back(i - M.nrows, c);
      ker.insert(std::move(right));
    } else {
      SVec<F> left;
      for (const auto& [i, c] : row) {
        if (i >= M.nrows) break;
        left.emplace_back(i, c);
      }
      img.insert(std::move(left));
    }
  }
  KernelImage<F> out{subspace_from_echelon(ker), subspace_from_echelon(img)};
  // Rank–nullity is structural here; keep the assert as a tripwire.
  assert(out.kernel.dim() + out.image.dim() == M.ncols);
  return out;
}

template <class F>
Subspace<F> kernel(const F& K, const IntMat& M) {
  return kernel_image(K, M).kernel;
}

// Kernel of a matrix given by field-valued columns (cols[j] = image of the
// j-th domain vector, coordinates below nrows).
template <class F>
Subspace<F> kernel_of_columns(const F& K, int nrows,
                              const std::vector<SVec<F>>& cols) {
  int ncols = static_cast<int>(cols.size());
  Echelon<F> e(K, nrows + ncols);
  for (int j = 0; j < ncols; ++j) {
    SVec<F> row = cols[j];
    row.emplace_back(nrows + j, K.one());
    e.insert(std::move(row));
  }
  Echelon<F> ker(K, ncols);
  for (const auto& row : e.sorted_rows()) {
    if (row.empty() || row.front().first < nrows) continue;
    SVec<F> right;
    right.reserve(row.size());
    for (const auto& [i, c] : row) right.emplace_back(i - nrows, c);
    ker.insert(std::move(right));
  }
  return subspace_from_echelon(ker);
}

template <class F>
Subspace<F> image(const F& K, const IntMat& M) {
  Echelon<F> e(K, M.nrows);
  for (int j = 0; j < M.ncols; ++j) e.insert(svec_from_int(K, M.cols[j]));
  return subspace_from_echelon(e);
}

template <class F>
int rank(const F& K, const IntMat& M) {
  Echelon<F> e(K, M.nrows);
  for (int j = 0; j < M.ncols; ++j) e.insert(svec_from_int(K, M.cols[j]));
  return e.rank();
}

// Image of a subspace under an integer matrix.
template <class F>
Subspace<F> map_subspace(const F& K, const IntMat& M, const Subspace<F>& U) {
  Echelon<F> e(K, M.nrows);
  for (const auto& u : U.basis) {
    SVec<F> acc;
    for (const auto& [j, c] : u) {
      SVec<F> col = svec_from_int(K, M.cols[j]);
      acc = svec_axpy(K, acc, c, col);
    }
    e.insert(std::move(acc));
  }
  return subspace_from_echelon(e);
}

template <class F>
SVec<F> map_vec(const F& K, const IntMat& M, const SVec<F>& v) {
  SVec<F> acc;
  for (const auto& [j, c] : v)
    acc = svec_axpy(K, acc, c, svec_from_int(K, M.cols[j]));
  return acc;
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) rank over Q for integer matrices.
//
// Independent elimination path used to cross-check the generic echelon: the
// two must agree on every rank query over the rationals.
// ---------------------------------------------------------------------------

inline int bareiss_rank(const IntMat& M) {
  // Dense fraction-free elimination on mpz entries.
  int n = M.nrows, m = M.ncols;
  if (n == 0 || m == 0) return 0;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(m, 0));
  for (int j = 0; j < m; ++j)
    for (const auto& [i, c] : M.cols[j]) a[i][j] = static_cast<long>(c);
  mpz_class prev = 1;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    for (int r = row + 1; r < n; ++r) {
      for (int c2 = col + 1; c2 < m; ++c2) {
        mpz_class t = a[row][col] * a[r][c2] - a[r][col] * a[row][c2];
        assert(prev == 1 || mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
        a[r][c2] = t / prev;
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

}  // namespace qhh
