// Higher cohomology of radical-square-zero presentations.
//
// For rad^2 = 0 the n-th cochain space splits as k(Qn || Q0) + k(Qn || Q1)
// (paths of length n parallel to a vertex resp. an arrow), the differential
// has a single nonzero block D_n : k(Qn || Q0) -> k(Q_{n+1} || Q1),
//   D_n(g || e) = sum_{s(a)=e} ag || a + (-1)^{n+1} sum_{t(b)=e} gb || b,
// and dim HH^n = dim Ker D_n + |Qn||Q1| - |Q_{n-1}||Q0| + dim Ker D_{n-1}
// for n >= 1 (degree 0: dim Ker D_0 + |Q0||Q1|).
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qhh/errors.hpp"
#include "qhh/linalg.hpp"
#include "qhh/presentation.hpp"

namespace qhh {

class RszComplex {
 public:
  // Materializes paths and differentials for degrees 0..max_degree+1; throws
  // BudgetError when the pair spaces would exceed `budget` total entries.
  // The complex keeps a pointer to the presentation, so the presentation
  // must outlive it; passing a temporary is rejected at compile time.
  RszComplex(const Presentation& pres, int max_degree,
             long long budget = 500000);
  RszComplex(Presentation&&, int, long long = 500000) = delete;

  const Presentation& pres() const { return *pres_; }
  int max_degree() const { return max_degree_; }

  // All paths of the given length, length-lex order.
  const std::vector<Path>& paths(int n) const { return paths_[n]; }
  std::optional<int> path_index(int n, const std::vector<int>& arrows) const;

  // Pair spaces: (path, vertex) cycles and (path, arrow) parallels.
  const std::vector<std::pair<int, int>>& q0_pairs(int n) const {
    return q0_pairs_[n];
  }
  const std::vector<std::pair<int, int>>& q1_pairs(int n) const {
    return q1_pairs_[n];
  }
  int q0_pair_index(int n, int path, int vertex) const;
  int q1_pair_index(int n, int path, int arrow) const;

  // D_n as an integer matrix (columns over q0_pairs(n), rows q1_pairs(n+1));
  // valid for 0 <= n <= max_degree.
  const IntMat& D(int n) const { return d_[n]; }

 private:
  const Presentation* pres_;
  int max_degree_;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::map<std::vector<int>, int>> path_pos_;
  std::vector<std::vector<std::pair<int, int>>> q0_pairs_, q1_pairs_;
  std::vector<std::map<std::pair<int, int>, int>> q0_pos_, q1_pos_;
  std::vector<IntMat> d_;
};

// Exact dims of HH^0..HH^n_max by elimination over the field.
template <class F>
std::vector<int> rsz_hh_dims(const F& K, const RszComplex& c, int n_max) {
  std::vector<int> ker(n_max + 1, 0);
  for (int n = 0; n <= n_max; ++n) ker[n] = kernel(K, c.D(n)).dim();
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) {
    int q1n = static_cast<int>(c.q1_pairs(n).size());
    if (n == 0) {
      out.push_back(ker[0] + q1n);
    } else {
      int q0prev = static_cast<int>(c.q0_pairs(n - 1).size());
      out.push_back(ker[n] + q1n - q0prev + ker[n - 1]);
    }
  }
  return out;
}

// Counting formula for connected non-crown quivers in degrees n > 1:
// |Qn||Q1| - |Q_{n-1}||Q0|, computed from adjacency-matrix powers (big
// integers, no path enumeration).  nullopt when the formula does not apply.
std::optional<mpz_class> rsz_formula_dim(const Presentation& pres, int n);

}  // namespace qhh
