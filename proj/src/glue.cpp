#include <stdexcept>
#include "qhh/glue.hpp"

#include <algorithm>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

std::string unique_name(const std::string& want,
                        const std::set<std::string>& taken) {
  std::string name = want;
  while (taken.count(name)) name += "_";
  return name;
}

}  // namespace

Gluing glue(const Presentation& A, int e1, int en,
            const std::string& f1_name) {
  const Quiver& qa = A.quiver();
  if (e1 < 0 || e1 >= qa.n_vertices() || en < 0 || en >= qa.n_vertices())
    throw SemanticError("gluing vertex out of range");
  if (e1 == en) throw SemanticError("gluing requires two distinct vertices");
  if (qa.is_isolated(e1) || qa.is_isolated(en))
    throw SemanticError("gluing vertices must not be isolated");

  std::set<std::string> taken;
  for (int v = 0; v < qa.n_vertices(); ++v)
    if (v != e1 && v != en) taken.insert(qa.vertex_name(v));
  for (int a = 0; a < qa.n_arrows(); ++a) taken.insert(qa.arrow(a).name);
  std::string fname =
      unique_name(f1_name.empty() ? std::string("f1") : f1_name, taken);

  Quiver qb;
  std::vector<int> vmap(qa.n_vertices(), -1);
  int f1 = -1;
  for (int v = 0; v < qa.n_vertices(); ++v) {
    if (v == en) continue;
    int id = qb.add_vertex(v == e1 ? fname : qa.vertex_name(v));
    vmap[v] = id;
    if (v == e1) f1 = id;
  }
  vmap[en] = f1;
  for (int a = 0; a < qa.n_arrows(); ++a)
    qb.add_arrow(qa.arrow(a).name, vmap[qa.arrow(a).src],
                 vmap[qa.arrow(a).tgt]);

  std::vector<Path> rels;
  for (const auto& r : A.relations()) rels.push_back(r);  // same arrow ids
  int n_junction = 0;
  for (int c = 0; c < qa.n_arrows(); ++c) {
    int tc = qa.arrow(c).tgt;
    if (tc != e1 && tc != en) continue;
    for (int b = 0; b < qa.n_arrows(); ++b) {
      int sb = qa.arrow(b).src;
      if (sb != e1 && sb != en) continue;
      if (sb == tc) continue;  // composable in A already
      Path r;
      r.arrows = {c, b};
      rels.push_back(r);
      ++n_junction;
    }
  }

  Gluing g{Presentation(std::move(qb), std::move(rels)), e1, en, f1,
           std::move(vmap), n_junction};
  if (g.B.dim() != A.dim() - 1)
    throw IdentityError("glued algebra dimension is not dim A - 1");
  return g;
}

SplitResult split_vertex(const Presentation& B, int f,
                         const std::set<int>& src_to_second,
                         const std::set<int>& tgt_to_second,
                         const std::string& first_name,
                         const std::string& second_name) {
  const Quiver& qb = B.quiver();
  if (f < 0 || f >= qb.n_vertices())
    throw SemanticError("split vertex out of range");
  for (int a : src_to_second)
    if (a < 0 || a >= qb.n_arrows() || qb.arrow(a).src != f)
      throw SemanticError("src_to_second lists an arrow not leaving the vertex");
  for (int a : tgt_to_second)
    if (a < 0 || a >= qb.n_arrows() || qb.arrow(a).tgt != f)
      throw SemanticError("tgt_to_second lists an arrow not entering the vertex");

  std::set<std::string> taken;
  for (int v = 0; v < qb.n_vertices(); ++v)
    if (v != f) taken.insert(qb.vertex_name(v));
  for (int a = 0; a < qb.n_arrows(); ++a) taken.insert(qb.arrow(a).name);
  std::string n1 = unique_name(
      first_name.empty() ? qb.vertex_name(f) + "_1" : first_name, taken);
  taken.insert(n1);
  std::string n2 = unique_name(
      second_name.empty() ? qb.vertex_name(f) + "_2" : second_name, taken);

  Quiver qa;
  std::vector<int> vmap(qb.n_vertices(), -1);
  int e1 = -1, en = -1;
  for (int v = 0; v < qb.n_vertices(); ++v) {
    if (v == f) {
      e1 = qa.add_vertex(n1);
      vmap[v] = e1;
    } else {
      vmap[v] = qa.add_vertex(qb.vertex_name(v));
    }
  }
  en = qa.add_vertex(n2);
  for (int a = 0; a < qb.n_arrows(); ++a) {
    int s = vmap[qb.arrow(a).src];
    int t = vmap[qb.arrow(a).tgt];
    if (src_to_second.count(a)) s = en;
    if (tgt_to_second.count(a)) t = en;
    qa.add_arrow(qb.arrow(a).name, s, t);
  }

  std::vector<Path> rels;
  for (const auto& r : B.relations()) {
    bool composable = true;
    for (int i = 0; i + 1 < r.length(); ++i)
      if (qa.arrow(r.arrows[i]).tgt != qa.arrow(r.arrows[i + 1]).src) {
        composable = false;
        break;
      }
    if (composable) rels.push_back(r);
  }
  return SplitResult{Presentation(std::move(qa), std::move(rels)), e1, en,
                     std::move(vmap)};
}

Path star_path(const Gluing& g, const Path& p) {
  Path out = p;
  if (out.trivial()) out.start = g.vmap[out.start];
  return out;
}

PsiMaps psi_maps(const CmonComplex& cA, const CmonComplex& cB,
                 const Gluing& g) {
  PsiMaps m;
  const Presentation& B = g.B;
  auto star_index = [&](int b_of_A) {
    return *B.basis_index(star_path(g, cA.pres->basis()[b_of_A]));
  };
  m.psi0 = IntMat(cB.v_pairs.size(), cA.v_pairs.size());
  for (int j = 0; j < cA.v_pairs.size(); ++j) {
    auto [e, b] = cA.v_pairs.pairs[j];
    m.psi0.set_col(
        j, IntVec{{cB.v_pairs.index_of(g.vmap[e], star_index(b)), 1}});
  }
  m.psi1 = IntMat(cB.a_pairs.size(), cA.a_pairs.size());
  for (int j = 0; j < cA.a_pairs.size(); ++j) {
    auto [a, b] = cA.a_pairs.pairs[j];
    m.psi1.set_col(j, IntVec{{cB.a_pairs.index_of(a, star_index(b)), 1}});
  }
  m.psi2 = IntMat(cB.r_pairs.size(), cA.r_pairs.size());
  for (int j = 0; j < cA.r_pairs.size(); ++j) {
    auto [r, b] = cA.r_pairs.pairs[j];
    // Relations of B list the carried relations first, same indices.
    m.psi2.set_col(j, IntVec{{cB.r_pairs.index_of(r, star_index(b)), 1}});
  }
  return m;
}

SpecialPaths special_paths(const Presentation& A, const Gluing& g,
                           const CmonComplex& cA, const CmonComplex& cB) {
  (void)cA;
  const Quiver& qa = A.quiver();
  SpecialPaths out;
  for (int b = 0; b < A.dim(); ++b) {
    const Path& p = A.basis()[b];
    if (p.trivial()) continue;
    int s = path_source(qa, p), t = path_target(qa, p);
    bool between = (s == g.e1 && t == g.en) || (s == g.en && t == g.e1);
    if (!between) continue;
    bool special = false;
    for (int a : qa.arrows_from(t)) {
      Path ext = p;
      ext.arrows.push_back(a);
      if (A.basis_index(ext)) special = true;
    }
    for (int a : qa.arrows_to(s)) {
      Path ext;
      ext.arrows = {a};
      ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (A.basis_index(ext)) special = true;
    }
    // Cross-check against the junction coboundary in B.
    Path q = star_path(g, p);
    int vp = cB.v_pairs.index_of(g.f1, *g.B.basis_index(q));
    bool d0_nonzero = !cB.d0.cols[vp].empty();
    if (special != d0_nonzero)
      throw IdentityError(
          "special-path characterizations disagree on '" + path_str(qa, p) +
          "'");
    (special ? out.special : out.nonspecial).push_back(b);
  }
  return out;
}

SpecialPairs special_pairs(const Presentation& A, const Gluing& g,
                           const CmonComplex& cB) {
  const Quiver& qa = A.quiver();
  const Presentation& B = g.B;

  SpecialPairs out;
  out.kind_counts.assign(8, 0);
  for (int a = 0; a < qa.n_arrows(); ++a) {
    const Arrow& ar = qa.arrow(a);
    bool s_j = (ar.src == g.e1 || ar.src == g.en);
    bool t_j = (ar.tgt == g.e1 || ar.tgt == g.en);
    // A non-incident arrow keeps both endpoints under the gluing, so any
    // path parallel to it in B was already parallel in A.
    if (!s_j && !t_j) continue;
    int bs = g.vmap[ar.src], bt = g.vmap[ar.tgt];
    for (int b = 0; b < A.dim(); ++b) {
      const Path& p = A.basis()[b];
      int ps = path_source(qa, p), pt = path_target(qa, p);
      if (ps == ar.src && pt == ar.tgt) continue;          // parallel in A
      if (g.vmap[ps] != bs || g.vmap[pt] != bt) continue;  // not so in B

      auto qb = B.basis_index(star_path(g, p));
      if (!qb)
        throw std::logic_error("basis path lost its image under gluing: " +
                         path_str(qa, p));
      int idx = cB.a_pairs.index_of(a, *qb);
      if (idx < 0)
        throw std::logic_error("special pair missing from the pair space");

      int kind = 0;
      if (s_j && t_j && ar.src == ar.tgt) {
        // Loop at a glued vertex: p is a cycle (or trivial) at the other
        // vertex (1), or runs between the two glued vertices (2).
        kind = (ps == pt) ? 1 : 2;
      } else if (s_j && t_j) {
        // Arrow between the glued vertices: cycles and trivial paths (3)
        // versus crossing paths, necessarily the opposite way (4).
        kind = (ps == pt) ? 3 : 4;
      } else {
        // One endpoint glued.  p runs between the glued vertices; classify
        // by where the arrow itself occurs inside p (traversal order).
        bool occurs = false;
        for (int k = 0; k < p.length(); ++k) occurs |= (p.arrows[k] == a);
        if (!occurs) {
          kind = 5;
        } else if (s_j) {
          // The arrow leaves the junction, so in composition order
          // p = p2 . alpha . p1: kind 6 when p2 is trivial (alpha is the
          // final traversal arrow), kind 7 when a cycle p2 follows it.
          kind = (p.arrows.back() == a) ? 6 : 7;
        } else {
          // Mirror: the arrow enters the junction.
          kind = (p.arrows.front() == a) ? 6 : 7;
        }
      }
      out.pairs.push_back(SpecialPair{a, b, idx, kind});
      ++out.kind_counts[kind];
    }
  }
  return out;
}

GluingShape gluing_shape(const Presentation& A, const Gluing& g) {
  GluingShape s;
  auto comp = A.quiver().components();
  s.same_block = comp[g.e1] == comp[g.en];
  s.source_sink = A.quiver().is_source(g.e1) && A.quiver().is_sink(g.en);
  s.c_A = A.quiver().n_components();
  s.c_B = g.B.quiver().n_components();
  return s;
}

AssumptionReport check_assumption(const Presentation& A, int e1, int en,
                                  const FieldSpec& field) {
  AssumptionReport rep;
  if (field.is_rational()) return rep;
  const Quiver& qa = A.quiver();
  for (int a = 0; a < qa.n_arrows(); ++a) {
    int s = qa.arrow(a).src, t = qa.arrow(a).tgt;
    if (s != t || (s != e1 && s != en)) continue;
    for (const auto& r : A.relations()) {
      bool power = std::all_of(r.arrows.begin(), r.arrows.end(),
                               [&](int x) { return x == a; });
      if (!power) continue;
      if (r.length() % static_cast<long long>(field.p) == 0) {
        rep.ok = false;
        rep.violations.push_back(
            "loop '" + qa.arrow(a).name + "' at a glued vertex has its power " +
            std::to_string(r.length()) +
            " as a relation, divisible by the characteristic " +
            std::to_string(field.p));
      }
    }
  }
  return rep;
}

}  // namespace qhh
