#include "qhh/rsz.hpp"

namespace qhh {

RszComplex::RszComplex(const Presentation& pres, int max_degree,
                       long long budget)
    : pres_(&pres), max_degree_(max_degree) {
  if (!pres.is_rsz())
    throw SemanticError(
        "higher-degree pair complex requires a radical-square-zero "
        "presentation");
  const Quiver& q = pres.quiver();
  int top = max_degree + 1;
  paths_.resize(top + 1);
  path_pos_.resize(top + 1);
  q0_pairs_.resize(top + 1);
  q1_pairs_.resize(top + 1);
  q0_pos_.resize(top + 1);
  q1_pos_.resize(top + 1);

  long long used = 0;
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      for (int v = 0; v < q.n_vertices(); ++v) {
        Path e;
        e.start = v;
        path_pos_[0].emplace(e.arrows, static_cast<int>(paths_[0].size()));
        paths_[0].push_back(e);
      }
      // Note: degree-0 trivial paths all share the empty arrow list; look
      // them up by start vertex instead.
      path_pos_[0].clear();
    } else {
      for (const auto& p : paths_[n - 1])
        for (int a : q.arrows_from(path_target(q, p))) {
          Path ext = p;
          ext.arrows.push_back(a);
          path_pos_[n].emplace(ext.arrows,
                               static_cast<int>(paths_[n].size()));
          paths_[n].push_back(std::move(ext));
        }
    }
    for (int pi = 0; pi < static_cast<int>(paths_[n].size()); ++pi) {
      const Path& p = paths_[n][pi];
      int s = path_source(q, p), t = path_target(q, p);
      if (s == t) {
        q0_pos_[n].emplace(std::make_pair(pi, s),
                           static_cast<int>(q0_pairs_[n].size()));
        q0_pairs_[n].emplace_back(pi, s);
      }
      for (int a = 0; a < q.n_arrows(); ++a)
        if (q.arrow(a).src == s && q.arrow(a).tgt == t) {
          q1_pos_[n].emplace(std::make_pair(pi, a),
                             static_cast<int>(q1_pairs_[n].size()));
          q1_pairs_[n].emplace_back(pi, a);
        }
    }
    used += static_cast<long long>(q0_pairs_[n].size()) +
            static_cast<long long>(q1_pairs_[n].size());
    if (used > budget)
      throw BudgetError("degree-" + std::to_string(n) +
                        " pair spaces exceed the computation budget");
  }

  d_.resize(top);
  for (int n = 0; n < top; ++n) {
    IntMat m(static_cast<int>(q1_pairs_[n + 1].size()),
             static_cast<int>(q0_pairs_[n].size()));
    int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
    for (int j = 0; j < static_cast<int>(q0_pairs_[n].size()); ++j) {
      auto [pi, e] = q0_pairs_[n][j];
      const Path& g = paths_[n][pi];
      IntVec col;
      for (int a : q.arrows_from(e)) {
        // a after g
        std::vector<int> w = g.arrows;
        w.push_back(a);
        int wp = *path_index(n + 1, w);
        intvec_add_term(col, q1_pair_index(n + 1, wp, a), 1);
      }
      for (int b : q.arrows_to(e)) {
        // g after b
        std::vector<int> w{b};
        w.insert(w.end(), g.arrows.begin(), g.arrows.end());
        int wp = *path_index(n + 1, w);
        intvec_add_term(col, q1_pair_index(n + 1, wp, b), sign);
      }
      m.set_col(j, std::move(col));
    }
    d_[n] = std::move(m);
  }
}

std::optional<int> RszComplex::path_index(int n,
                                          const std::vector<int>& arrows) const {
  if (n < 0 || n >= static_cast<int>(paths_.size())) return std::nullopt;
  auto it = path_pos_[n].find(arrows);
  if (it == path_pos_[n].end()) return std::nullopt;
  return it->second;
}

int RszComplex::q0_pair_index(int n, int path, int vertex) const {
  auto it = q0_pos_[n].find({path, vertex});
  return it == q0_pos_[n].end() ? -1 : it->second;
}

int RszComplex::q1_pair_index(int n, int path, int arrow) const {
  auto it = q1_pos_[n].find({path, arrow});
  return it == q1_pos_[n].end() ? -1 : it->second;
}

std::optional<mpz_class> rsz_formula_dim(const Presentation& pres, int n) {
  const Quiver& q = pres.quiver();
  if (n <= 1) return std::nullopt;
  if (q.n_components() != 1 || q.is_crown()) return std::nullopt;
  int nv = q.n_vertices();
  // adj[u][v] = number of arrows u -> v; powers count paths.
  std::vector<std::vector<mpz_class>> adj(nv, std::vector<mpz_class>(nv, 0));
  for (const auto& a : q.arrows()) adj[a.src][a.tgt] += 1;
  auto mul = [&](const auto& x, const auto& y) {
    std::vector<std::vector<mpz_class>> z(nv, std::vector<mpz_class>(nv, 0));
    for (int i = 0; i < nv; ++i)
      for (int k = 0; k < nv; ++k)
        if (x[i][k] != 0)
          for (int j = 0; j < nv; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  auto pw = adj;
  for (int t = 1; t < n - 1; ++t) pw = mul(pw, adj);  // adj^(n-1)
  mpz_class q0_prev = 0;
  for (int v = 0; v < nv; ++v) q0_prev += pw[v][v];
  pw = mul(pw, adj);  // adj^n
  mpz_class q1_n = 0;
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) q1_n += pw[u][v] * adj[u][v];
  return q1_n - q0_prev;
}

}  // namespace qhh
