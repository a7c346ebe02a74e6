// Brute-force Hochschild cohomology via the reduced bar complex relative to
// the vertex-span subalgebra E (separable, so the relative complex computes
// the absolute cohomology).
//
//   C^0 = {cyclic basis paths},   C^n = pairs (T, q) where T is a composable
// tuple of n radical basis paths and q a basis path parallel to T,
//
// with the usual alternating differential (outer multiplications on the two
// ends, neighbor merges inside; all products truncated by the relations).
// This shares no code path with the parallel-pair complexes and serves as
// the independent oracle for degrees 0 and 1 everywhere, and for higher
// degrees on radical-square-zero inputs.
#pragma once

#include <map>
#include <vector>

#include "qhh/errors.hpp"
#include "qhh/linalg.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

class BarComplex {
 public:
  // Builds C^0 .. C^(max_degree+1) and the differentials between them.  The
  // complex keeps a pointer to the presentation, so the presentation must
  // outlive it; passing a temporary is rejected at compile time.
  BarComplex(const Presentation& pres, int max_degree,
             long long budget = 2000000);
  BarComplex(Presentation&&, int, long long = 2000000) = delete;

  int max_degree() const { return max_degree_; }
  int dim_c(int n) const { return static_cast<int>(basis_[n].size()); }
  // d^n : C^n -> C^{n+1}, for 0 <= n <= max_degree.
  const IntMat& d(int n) const { return d_[n]; }

 private:
  struct Cochain {
    std::vector<std::vector<int>> tuple;  // arrow lists, traversal order
    int q = -1;                           // basis index of the value path
    bool operator<(const Cochain& o) const {
      if (tuple != o.tuple) return tuple < o.tuple;
      return q < o.q;
    }
  };

  const Presentation* pres_;
  int max_degree_;
  std::vector<std::vector<Cochain>> basis_;
  std::vector<std::map<Cochain, int>> pos_;
  std::vector<IntMat> d_;
};

// dim HH^0..HH^n over the field, from the bar complex.
template <class F>
std::vector<int> bar_hh_dims(const F& K, const BarComplex& bar, int n_max) {
  std::vector<int> out;
  int prev_rank = 0;
  for (int n = 0; n <= n_max; ++n) {
    auto ki = kernel_image(K, bar.d(n));
    out.push_back(ki.kernel.dim() - prev_rank);
    prev_rank = ki.image.dim();
  }
  return out;
}

}  // namespace qhh
