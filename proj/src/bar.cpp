#include "qhh/bar.hpp"

#include <cassert>

namespace qhh {

BarComplex::BarComplex(const Presentation& pres, int max_degree,
                       long long budget)
    : pres_(&pres), max_degree_(max_degree) {
  const Quiver& qv = pres.quiver();
  int top = max_degree + 1;
  basis_.resize(top + 1);
  pos_.resize(top + 1);

  // Radical basis paths (length >= 1): the tuple slots and the two outer
  // multipliers in the differential.
  std::vector<std::vector<int>> singles;
  for (int b = 0; b < pres.dim(); ++b)
    if (!pres.basis()[b].trivial()) singles.push_back(pres.basis()[b].arrows);

  auto tuple_source = [&](const std::vector<std::vector<int>>& t) {
    return qv.arrow(t.front().front()).src;
  };
  auto tuple_target = [&](const std::vector<std::vector<int>>& t) {
    return qv.arrow(t.back().back()).tgt;
  };

  // C^0: cyclic basis paths.
  for (int b = 0; b < pres.dim(); ++b) {
    const Path& p = pres.basis()[b];
    if (path_source(qv, p) != path_target(qv, p)) continue;
    Cochain c;
    c.q = b;
    pos_[0].emplace(c, static_cast<int>(basis_[0].size()));
    basis_[0].push_back(std::move(c));
  }

  // C^n: composable n-tuples extended degree by degree, each paired with
  // every parallel basis path (trivial values included).
  long long used = static_cast<long long>(basis_[0].size());
  std::vector<std::vector<std::vector<std::vector<int>>>> tuples(top + 1);
  for (int n = 1; n <= top; ++n) {
    if (n == 1) {
      for (const auto& s : singles) tuples[1].push_back({s});
    } else {
      for (const auto& t : tuples[n - 1]) {
        int end = tuple_target(t);
        for (const auto& s : singles)
          if (qv.arrow(s.front()).src == end) {
            auto ext = t;
            ext.push_back(s);
            tuples[n].push_back(std::move(ext));
          }
      }
    }
    for (const auto& t : tuples[n]) {
      int s = tuple_source(t), e = tuple_target(t);
      for (int b = 0; b < pres.dim(); ++b) {
        const Path& p = pres.basis()[b];
        if (path_source(qv, p) != s || path_target(qv, p) != e) continue;
        Cochain c;
        c.tuple = t;
        c.q = b;
        pos_[n].emplace(c, static_cast<int>(basis_[n].size()));
        basis_[n].push_back(std::move(c));
      }
    }
    used += static_cast<long long>(basis_[n].size());
    if (used > budget)
      throw BudgetError("bar complex degree " + std::to_string(n) +
                        " exceeds the computation budget");
  }

  // Product in the algebra: traversal concatenation, zero when a relation
  // appears as a factor.
  auto prod = [&](const std::vector<int>& x,
                  const std::vector<int>& y) -> std::optional<int> {
    Path r;
    r.arrows = x;
    r.arrows.insert(r.arrows.end(), y.begin(), y.end());
    if (pres.has_forbidden_factor(r)) return std::nullopt;
    return pres.basis_index(r);
  };

  // d^n applied to the basis cochain f = (T, q)^*:
  //   +1            at (T.p, q.p)      for radical p with s(p) = t(q),
  //   (-1)^{n+1}    at (p.T, p.q)      for radical p with t(p) = s(q),
  //   (-1)^{n+1-i}  at (T with slot i cut in two, q)   for 1 <= i <= n,
  // products truncated by the relations; absent terms are dropped.
  d_.resize(top);
  for (int n = 0; n < top; ++n) {
    IntMat m(dim_c(n + 1), dim_c(n));
    for (int j = 0; j < dim_c(n); ++j) {
      const Cochain& f = basis_[n][j];
      const Path& val = pres.basis()[f.q];
      IntVec col;
      int sign_outer = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
      for (const auto& s : singles) {
        if (qv.arrow(s.front()).src == path_target(qv, val)) {
          if (auto bi = prod(val.arrows, s)) {
            Cochain c;
            c.tuple = f.tuple;
            c.tuple.push_back(s);
            c.q = *bi;
            auto it = pos_[n + 1].find(c);
            assert(it != pos_[n + 1].end());
            intvec_add_term(col, it->second, 1);
          }
        }
        if (qv.arrow(s.back()).tgt == path_source(qv, val)) {
          if (auto bi = prod(s, val.arrows)) {
            Cochain c;
            c.tuple.reserve(f.tuple.size() + 1);
            c.tuple.push_back(s);
            c.tuple.insert(c.tuple.end(), f.tuple.begin(), f.tuple.end());
            c.q = *bi;
            auto it = pos_[n + 1].find(c);
            assert(it != pos_[n + 1].end());
            intvec_add_term(col, it->second, sign_outer);
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        const auto& slot = f.tuple[i];
        int sign = ((n - i) % 2 == 0) ? 1 : -1;  // slot i+1: (-1)^{n-i}
        for (std::size_t cut = 1; cut < slot.size(); ++cut) {
          Cochain c;
          c.q = f.q;
          c.tuple.reserve(f.tuple.size() + 1);
          for (int k = 0; k < i; ++k) c.tuple.push_back(f.tuple[k]);
          c.tuple.emplace_back(slot.begin(), slot.begin() + cut);
          c.tuple.emplace_back(slot.begin() + cut, slot.end());
          for (int k = i + 1; k < n; ++k) c.tuple.push_back(f.tuple[k]);
          auto it = pos_[n + 1].find(c);
          assert(it != pos_[n + 1].end());
          intvec_add_term(col, it->second, sign);
        }
      }
      m.set_col(j, std::move(col));
    }
    d_[n] = std::move(m);
  }
}

}  // namespace qhh
