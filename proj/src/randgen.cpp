// Random presentations and gluing scenarios (see randgen.hpp).
#include "qhh/randgen.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {
namespace {

bool has_factor(const Path& w, const Path& f) {
  int n = w.length(), m = f.length();
  for (int i = 0; i + m <= n; ++i)
    if (std::equal(f.arrows.begin(), f.arrows.end(), w.arrows.begin() + i))
      return true;
  return false;
}

// All composable words of length 2..max_len (capped; the arrow bounds keep
// this tiny in practice).
std::vector<Path> composable_words(const Quiver& q, int max_len) {
  std::vector<Path> words, frontier;
  for (int a = 0; a < q.n_arrows(); ++a) frontier.push_back(Path{-1, {a}});
  for (int len = 2; len <= max_len && words.size() <= 5000; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int a : q.arrows_from(path_target(q, p))) {
        Path e = p;
        e.arrows.push_back(a);
        next.push_back(e);
        words.push_back(e);
      }
    frontier = std::move(next);
  }
  return words;
}

}  // namespace

int InstanceGen::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Quiver InstanceGen::random_quiver(const RandOptions& opt, bool two_groups) {
  Quiver q;
  int nv = uniform(two_groups ? 2 : 1, std::max(2, opt.max_vertices));
  for (int v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));

  // For the different-block shape the vertex set is cut in two and arrows
  // stay inside their side, so at least two components survive.
  int cut = two_groups ? uniform(1, nv - 1) : nv;
  auto side_of = [&](int v) { return v < cut ? 0 : 1; };

  int na = uniform(1, opt.max_arrows);
  for (int a = 0; a < na; ++a) {
    int s = uniform(0, nv - 1);
    std::vector<int> targets;
    for (int t = 0; t < nv; ++t)
      if (!two_groups || side_of(t) == side_of(s)) targets.push_back(t);
    int t = targets[uniform(0, static_cast<int>(targets.size()) - 1)];
    q.add_arrow("a" + std::to_string(a), s, t);
  }
  return q;
}

// One relation draw on a fixed quiver; nullopt when the quotient is
// infinite-dimensional or over budget.
std::optional<Presentation> InstanceGen::sample_on(const Quiver& q,
                                                   const RandOptions& opt,
                                                   bool force_rsz) {
  std::vector<Path> rel;
  if (force_rsz) {
    for (const Path& w : composable_words(q, 2)) rel.push_back(w);
  } else {
    std::vector<Path> pick;
    for (const Path& w : composable_words(q, opt.max_relation_len))
      if (uniform(0, 99) < 35) pick.push_back(w);
    // Keep only factor-minimal picks so Z is an antichain.
    std::sort(pick.begin(), pick.end());
    for (const Path& w : pick) {
      bool covered = false;
      for (const Path& f : rel)
        if (has_factor(w, f)) { covered = true; break; }
      if (!covered) rel.push_back(w);
    }
  }
  try {
    Presentation p(q, rel);
    if (p.dim() <= opt.max_dim) return p;
  } catch (const SemanticError&) {
    // infinite-dimensional quotient
  }
  return std::nullopt;
}

Presentation InstanceGen::presentation(const RandOptions& opt) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    Quiver q = random_quiver(opt, /*two_groups=*/false);
    // Radical square zero always lands inside the default budget, so late
    // attempts fall back to it to guarantee termination.
    if (auto p = sample_on(q, opt, opt.rsz || attempt >= 300)) return *p;
  }
  throw std::logic_error("random presentation generation did not converge");
}

GlueCase InstanceGen::glue_case(BlockShape block, IncidenceShape inc,
                                const FieldSpec& field,
                                const RandOptions& opt) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    bool two_groups = (block == BlockShape::Different);
    Quiver q = random_quiver(opt, two_groups);
    auto drawn = sample_on(q, opt, opt.rsz || attempt >= 3000);
    if (!drawn) continue;
    Presentation A = std::move(*drawn);

    auto comp = A.quiver().components();
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < q.n_vertices(); ++u)
      for (int v = 0; v < q.n_vertices(); ++v) {
        if (u == v) continue;
        if (q.is_isolated(u) || q.is_isolated(v)) continue;
        bool same = comp[u] == comp[v];
        if ((block == BlockShape::Same) != same) continue;
        if (inc == IncidenceShape::SourceSink &&
            !(q.is_source(u) && q.is_sink(v)))
          continue;
        if (!check_assumption(A, u, v, field).ok) continue;
        candidates.emplace_back(u, v);
      }
    if (candidates.empty()) continue;
    auto [e1, en] =
        candidates[uniform(0, static_cast<int>(candidates.size()) - 1)];
    return GlueCase{std::move(A), e1, en};
  }
  throw std::logic_error("gluing scenario generation did not converge");
}

}  // namespace qhh
