// Construction of the shared test fixtures.
#include "support/fixtures.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qhh::fixtures {
namespace {

// All composable length-2 words of a quiver, as traversal-order paths.
std::vector<Path> all_length2(const Quiver& q) {
  std::vector<Path> out;
  for (int x = 0; x < q.n_arrows(); ++x)
    for (int y : q.arrows_from(q.arrow(x).tgt)) {
      Path p;
      p.start = q.arrow(x).src;
      p.arrows = {x, y};
      out.push_back(std::move(p));
    }
  return out;
}

Path word(const Quiver& q, std::initializer_list<const char*> names) {
  Path p;
  p.arrows.reserve(names.size());
  for (const char* n : names) {
    auto a = q.arrow_index(n);
    if (!a) throw std::logic_error(std::string("fixture arrow ") + n);
    p.arrows.push_back(*a);
  }
  p.start = q.arrow(p.arrows.front()).src;
  return p;
}

}  // namespace

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("QHH_FIXTURE_DIR");
  if (!dir) throw std::logic_error("QHH_FIXTURE_DIR is not set");
  return std::string(dir) + "/" + name;
}

Presentation rsz_of(const Quiver& q) { return Presentation(q, all_length2(q)); }

Presentation a2() {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2");
  q.add_arrow("al", e1, e2);
  return Presentation(q, {});
}

Presentation dual_numbers() {
  Quiver q;
  int v = q.add_vertex("e1");
  q.add_arrow("x", v, v);
  return rsz_of(q);
}

Presentation local_loops(int m) {
  Quiver q;
  int v = q.add_vertex("v");
  for (int i = 1; i <= m; ++i) q.add_arrow("x" + std::to_string(i), v, v);
  return rsz_of(q);
}

Presentation kronecker(int m) {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2");
  for (int i = 1; i <= m; ++i) q.add_arrow("a" + std::to_string(i), e1, e2);
  return Presentation(q, {});
}

Presentation line_with_tails() {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3"), e4 = q.add_vertex("e4"),
      e5 = q.add_vertex("e5");
  q.add_arrow("b", e2, e1);
  q.add_arrow("c", e1, e3);
  q.add_arrow("d", e3, e5);
  q.add_arrow("a", e5, e4);
  return Presentation(q, {});
}

Presentation bridge_fan(int n) {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3"), e4 = q.add_vertex("e4");
  q.add_arrow("a", e2, e1);
  for (int i = 1; i <= n; ++i) q.add_arrow("al" + std::to_string(i), e1, e4);
  q.add_arrow("b", e4, e3);
  return Presentation(q, {});
}

Presentation bridge_fan_reversed(int n) {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3"), e4 = q.add_vertex("e4");
  q.add_arrow("a", e2, e1);
  for (int i = 1; i <= n; ++i) q.add_arrow("al" + std::to_string(i), e1, e4);
  q.add_arrow("b", e3, e4);
  std::vector<Path> rels;
  for (int i = 1; i <= n; ++i)
    rels.push_back(word(q, {"a", ("al" + std::to_string(i)).c_str()}));
  return Presentation(q, rels);
}

Presentation glued_fan_direct(int n, bool with_junction) {
  Quiver q;
  int f1 = q.add_vertex("f1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3");
  q.add_arrow("a", e2, f1);
  for (int i = 1; i <= n; ++i) q.add_arrow("al" + std::to_string(i), f1, f1);
  q.add_arrow("b", f1, e3);
  std::vector<Path> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rels.push_back(word(q, {("al" + std::to_string(i)).c_str(),
                              ("al" + std::to_string(j)).c_str()}));
  if (with_junction) rels.push_back(word(q, {"a", "b"}));
  return Presentation(q, rels);
}

Presentation loop_with_legs() {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3");
  q.add_arrow("al", e1, e1);
  q.add_arrow("be", e2, e1);
  q.add_arrow("ga", e1, e3);
  return Presentation(q, {word(q, {"al", "al"})});
}

Presentation tangle3() {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3");
  q.add_arrow("al", e1, e1);
  q.add_arrow("be", e1, e3);
  q.add_arrow("ga", e1, e2);
  q.add_arrow("a", e3, e1);
  q.add_arrow("c", e3, e2);
  q.add_arrow("d", e2, e2);
  // All composable length-3 words except a.ga.d.
  std::vector<Path> rels;
  for (int x = 0; x < q.n_arrows(); ++x)
    for (int y : q.arrows_from(q.arrow(x).tgt))
      for (int z : q.arrows_from(q.arrow(y).tgt)) {
        Path p;
        p.start = q.arrow(x).src;
        p.arrows = {x, y, z};
        rels.push_back(std::move(p));
      }
  Path keep = word(q, {"a", "ga", "d"});
  std::erase_if(rels, [&](const Path& p) { return p == keep; });
  return Presentation(q, rels);
}

Presentation diamond_with_tail() {
  Quiver q;
  int e1 = q.add_vertex("e1"), e2 = q.add_vertex("e2"),
      e3 = q.add_vertex("e3"), e4 = q.add_vertex("e4");
  q.add_arrow("al1", e1, e2);
  q.add_arrow("al2", e1, e2);
  q.add_arrow("be", e2, e4);
  q.add_arrow("ga", e1, e4);
  q.add_arrow("eta", e1, e3);
  return Presentation(q, {word(q, {"al1", "be"})});
}

Presentation zigzag(int half) {
  Quiver q;
  std::vector<int> v;
  for (int i = 1; i <= 2 * half; ++i)
    v.push_back(q.add_vertex("e" + std::to_string(i)));
  int k = 0;
  for (int i = 0; i + 1 < 2 * half; ++i) {
    // Odd-indexed vertices are sources, even-indexed are sinks.
    int from = (i % 2 == 0) ? v[i] : v[i + 1];
    int to = (i % 2 == 0) ? v[i + 1] : v[i];
    q.add_arrow("a" + std::to_string(++k), from, to);
  }
  return Presentation(q, {});
}

Presentation two_local_blocks(int m, int n) {
  Quiver q;
  int u = q.add_vertex("u"), v = q.add_vertex("v");
  for (int i = 1; i <= m; ++i) q.add_arrow("x" + std::to_string(i), u, u);
  for (int i = 1; i <= n; ++i) q.add_arrow("y" + std::to_string(i), v, v);
  return rsz_of(q);
}

Presentation rsz_line(int k) {
  Quiver q;
  std::vector<int> v;
  for (int i = 1; i <= k; ++i)
    v.push_back(q.add_vertex("e" + std::to_string(i)));
  for (int i = 0; i + 1 < k; ++i)
    q.add_arrow("a" + std::to_string(i + 1), v[i], v[i + 1]);
  return rsz_of(q);
}

Presentation sl2_pair_quiver() {
  Quiver q;
  int vj = q.add_vertex("vj"), vi = q.add_vertex("vi"),
      vh = q.add_vertex("vh"), vg = q.add_vertex("vg"),
      va = q.add_vertex("va"), vd = q.add_vertex("vd"),
      ve = q.add_vertex("ve"), vf = q.add_vertex("vf"),
      vb = q.add_vertex("vb");
  q.add_arrow("al1", vj, vj);
  q.add_arrow("al2", vj, vj);
  q.add_arrow("eta1", vj, vi);
  q.add_arrow("xi4", vi, vh);
  q.add_arrow("xi1", vi, vd);
  q.add_arrow("eta2", vh, vg);
  q.add_arrow("be1", vd, va);
  q.add_arrow("be2", vd, va);
  q.add_arrow("be3", vd, vb);
  q.add_arrow("ga2", va, vb);
  q.add_arrow("ga1", vb, va);
  q.add_arrow("xi3", ve, vh);
  q.add_arrow("xi2", ve, vd);
  q.add_arrow("eta3", vf, ve);
  return rsz_of(q);
}

std::vector<ReductionStep> sl2_pair_reduction() {
  return {
      // Detach the loop pair from the rest of its block.
      {"vj", {"al1", "al2"}, {"al1", "al2"}},
      // Separate the in- and out-arrows at the two-cycle vertex.
      {"vb", {}, {"ga2", "be3"}},
      // Separate the two remaining sinks.
      {"vb_2", {}, {"be3"}},
      // Detach the branch vertex into its sink and source halves.
      {"vi", {"xi4", "xi1"}, {}},
      // Separate the two sources.
      {"vi_2", {"xi4"}, {}},
  };
}

}  // namespace qhh::fixtures
