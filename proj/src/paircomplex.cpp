#include "qhh/paircomplex.hpp"

#include <cassert>

namespace qhh {

IntVec substitute(const Presentation& pres, const Path& q, int arrow,
                  const Path& gamma) {
  IntVec acc;
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    if (q.arrows[i] != arrow) continue;
    Path res;
    res.arrows.assign(q.arrows.begin(), q.arrows.begin() + i);
    res.arrows.insert(res.arrows.end(), gamma.arrows.begin(),
                      gamma.arrows.end());
    res.arrows.insert(res.arrows.end(), q.arrows.begin() + i + 1,
                      q.arrows.end());
    if (res.arrows.empty()) res.start = gamma.start;
    if (auto b = pres.basis_index(res)) intvec_add_term(acc, *b, 1);
  }
  return intvec_normalize(std::move(acc));
}

CmonComplex build_cmon(const Presentation& pres) {
  CmonComplex c;
  c.pres = &pres;
  const Quiver& q = pres.quiver();
  const auto& basis = pres.basis();

  for (int e = 0; e < q.n_vertices(); ++e)
    for (int b = 0; b < pres.dim(); ++b)
      if (path_source(q, basis[b]) == e && path_target(q, basis[b]) == e)
        c.v_pairs.push(e, b);
  for (int a = 0; a < q.n_arrows(); ++a)
    for (int b = 0; b < pres.dim(); ++b)
      if (path_source(q, basis[b]) == q.arrow(a).src &&
          path_target(q, basis[b]) == q.arrow(a).tgt)
        c.a_pairs.push(a, b);
  for (int r = 0; r < static_cast<int>(pres.relations().size()); ++r) {
    const Path& rel = pres.relations()[r];
    for (int b = 0; b < pres.dim(); ++b)
      if (path_source(q, basis[b]) == path_source(q, rel) &&
          path_target(q, basis[b]) == path_target(q, rel))
        c.r_pairs.push(r, b);
  }

  // d0(e || p) = sum_{s(a)=e, ap in B} a || ap - sum_{t(a)=e, pa in B} a || pa
  // (ap is "a after p").
  c.d0 = IntMat(c.a_pairs.size(), c.v_pairs.size());
  for (int j = 0; j < c.v_pairs.size(); ++j) {
    auto [e, b] = c.v_pairs.pairs[j];
    const Path& p = basis[b];
    IntVec col;
    for (int a : q.arrows_from(e)) {
      Path ext = p;
      ext.arrows.push_back(a);
      if (auto bi = pres.basis_index(ext))
        intvec_add_term(col, c.a_pairs.index_of(a, *bi), 1);
    }
    for (int a : q.arrows_to(e)) {
      Path ext;
      ext.arrows.push_back(a);
      ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (auto bi = pres.basis_index(ext))
        intvec_add_term(col, c.a_pairs.index_of(a, *bi), -1);
    }
    c.d0.set_col(j, std::move(col));
  }

  // d1(a || g) = sum_r r || r^{a -> g} (substitution, basis terms only).
  c.d1 = IntMat(c.r_pairs.size(), c.a_pairs.size());
  for (int j = 0; j < c.a_pairs.size(); ++j) {
    auto [a, b] = c.a_pairs.pairs[j];
    const Path& gamma = basis[b];
    IntVec col;
    for (int r = 0; r < static_cast<int>(pres.relations().size()); ++r)
      for (const auto& [bi, coeff] :
           substitute(pres, pres.relations()[r], a, gamma))
        intvec_add_term(col, c.r_pairs.index_of(r, bi), coeff);
    c.d1.set_col(j, std::move(col));
  }

  // d1 . d0 = 0 is structural; assert it while the matrices are fresh.
  assert(c.d1.compose(c.d0).is_zero());
  return c;
}

int CmonComplex::v_weight(int i) const {
  return pres->basis()[v_pairs.pairs[i].second].length();
}

int CmonComplex::a_weight(int i) const {
  return pres->basis()[a_pairs.pairs[i].second].length() - 1;
}

std::string CmonComplex::render_v(int i) const {
  auto [e, b] = v_pairs.pairs[i];
  return "e_" + pres->quiver().vertex_name(e) + "||" +
         path_str(pres->quiver(), pres->basis()[b]);
}

std::string CmonComplex::render_a(int i) const {
  auto [a, b] = a_pairs.pairs[i];
  return pres->quiver().arrow(a).name + "||" +
         path_str(pres->quiver(), pres->basis()[b]);
}

}  // namespace qhh
