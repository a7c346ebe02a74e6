#include "qhh/lie.hpp"

#include <sstream>

namespace qhh {

const IntVec& BracketCache::pair_bracket(int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Presentation& pres = *c_->pres;
  auto [a, gi] = c_->a_pairs.pairs[i];
  auto [b, ei] = c_->a_pairs.pairs[j];
  const Path& gamma = pres.basis()[gi];
  const Path& eps = pres.basis()[ei];
  IntVec acc;
  for (const auto& [d, coeff] : substitute(pres, eps, a, gamma))
    intvec_add_term(acc, c_->a_pairs.index_of(b, d), coeff);
  for (const auto& [d, coeff] : substitute(pres, gamma, b, eps))
    intvec_add_term(acc, c_->a_pairs.index_of(a, d), -coeff);
  return memo_.emplace(key, intvec_normalize(std::move(acc))).first->second;
}

std::string profile_str(const LieProfile& p) {
  std::ostringstream out;
  out << "dim=" << p.dim << " center=" << p.center_dim << " derived=[";
  for (std::size_t i = 0; i < p.derived_series.size(); ++i)
    out << (i ? "," : "") << p.derived_series[i];
  out << "] lower_central=[";
  for (std::size_t i = 0; i < p.lower_central_series.size(); ++i)
    out << (i ? "," : "") << p.lower_central_series[i];
  out << "]" << (p.solvable ? " solvable" : "")
      << (p.nilpotent ? " nilpotent" : "") << (p.abelian ? " abelian" : "");
  return out.str();
}

SfPrediction sf_prediction(const Presentation& pres) {
  if (!pres.is_rsz())
    throw SemanticError(
        "the semisimple-plus-abelian description requires a radical-square-"
        "zero presentation");
  if (pres.quiver().n_components() != 1)
    throw SemanticError(
        "the semisimple-plus-abelian description requires a connected quiver");
  SfPrediction out;
  for (const auto& cls : pres.quiver().parallel_classes())
    if (cls.size() >= 2) out.class_sizes.push_back(static_cast<int>(cls.size()));
  out.chi_reduced = pres.quiver().reduced_euler_rank();
  out.dim = out.chi_reduced;
  for (int s : out.class_sizes) out.dim += s * s - 1;
  return out;
}

}  // namespace qhh
