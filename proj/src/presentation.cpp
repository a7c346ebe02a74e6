#include "qhh/presentation.hpp"

#include <algorithm>
#include <set>

#include "qhh/errors.hpp"

namespace qhh {

int path_source(const Quiver& q, const Path& p) {
  return p.trivial() ? p.start : q.arrow(p.arrows.front()).src;
}

int path_target(const Quiver& q, const Path& p) {
  return p.trivial() ? p.start : q.arrow(p.arrows.back()).tgt;
}

bool path_composable(const Quiver& q, const Path& p, const Path& then) {
  return path_target(q, p) == path_source(q, then);
}

Path path_concat(const Path& p, const Path& then) {
  Path out;
  out.start = p.start;
  out.arrows = p.arrows;
  out.arrows.insert(out.arrows.end(), then.arrows.begin(), then.arrows.end());
  return out;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertex_name(p.start);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

namespace {

// True iff some relation is a suffix of the arrow word w.
bool relation_suffix(const std::vector<Path>& rels, const std::vector<int>& w) {
  for (const auto& r : rels) {
    std::size_t k = r.arrows.size();
    if (k > w.size()) continue;
    if (std::equal(r.arrows.begin(), r.arrows.end(), w.end() - k)) return true;
  }
  return false;
}

}  // namespace

Presentation::Presentation(Quiver q, std::vector<Path> relations)
    : quiver_(std::move(q)), relations_(std::move(relations)) {
  validate_relations();
  build_basis();
}

void Presentation::validate_relations() const {
  std::set<std::vector<int>> seen;
  for (const auto& r : relations_) {
    if (r.length() < 2)
      throw SemanticError("relation '" + path_str(quiver_, r) +
                          "' has length < 2");
    for (int i = 0; i + 1 < r.length(); ++i)
      if (quiver_.arrow(r.arrows[i]).tgt != quiver_.arrow(r.arrows[i + 1]).src)
        throw SemanticError("relation '" + path_str(quiver_, r) +
                            "' is not a composable path");
    if (!seen.insert(r.arrows).second)
      throw SemanticError("duplicate relation '" + path_str(quiver_, r) + "'");
  }
  // Antichain under the contiguous-factor order (a minimal generating set).
  for (const auto& r : relations_)
    for (const auto& s : relations_) {
      if (&r == &s || s.arrows.size() >= r.arrows.size()) continue;
      auto it = std::search(r.arrows.begin(), r.arrows.end(), s.arrows.begin(),
                            s.arrows.end());
      if (it != r.arrows.end())
        throw SemanticError("relation set is not minimal: '" +
                            path_str(quiver_, s) + "' is a factor of '" +
                            path_str(quiver_, r) + "'");
    }
}

void Presentation::build_basis() {
  // Finite-dimensionality first, on the factor automaton: states are the
  // trivial state per vertex plus the nonempty proper prefixes of relations;
  // the quotient is infinite-dimensional iff the live transition graph has a
  // directed cycle (any such cycle pumps a relation-free path family).
  struct State {
    int vertex;              // endpoint of the prefix (or the bare vertex)
    std::vector<int> word;   // empty for the trivial state
  };
  std::vector<State> states;
  std::map<std::pair<int, std::vector<int>>, int> state_id;
  auto intern = [&](int vtx, std::vector<int> w) {
    auto key = std::make_pair(vtx, w);
    auto it = state_id.find(key);
    if (it != state_id.end()) return it->second;
    int id = static_cast<int>(states.size());
    state_id.emplace(std::move(key), id);
    states.push_back(State{vtx, std::move(w)});
    return id;
  };
  std::set<std::vector<int>> prefixes;  // nonempty proper relation prefixes
  std::size_t max_pref = 0;
  for (const auto& r : relations_)
    for (std::size_t k = 1; k < r.arrows.size(); ++k) {
      prefixes.insert(std::vector<int>(r.arrows.begin(), r.arrows.begin() + k));
      max_pref = std::max(max_pref, k);
    }
  for (int v = 0; v < quiver_.n_vertices(); ++v) intern(v, {});

  auto step = [&](int sid, int arrow) -> int {
    // Returns the successor state, or -1 when the extension hits a relation.
    const State st = states[sid];
    if (quiver_.arrow(arrow).src != st.vertex) return -2;  // not composable
    std::vector<int> w = st.word;
    w.push_back(arrow);
    if (relation_suffix(relations_, w)) return -1;
    std::size_t lo = w.size() > max_pref ? w.size() - max_pref : 0;
    for (std::size_t start = lo; start < w.size(); ++start) {
      std::vector<int> suf(w.begin() + start, w.end());
      if (prefixes.count(suf))
        return intern(quiver_.arrow(arrow).tgt, std::move(suf));
    }
    return intern(quiver_.arrow(arrow).tgt, {});
  };

  // Iterative DFS with colors over the (lazily materialized) state graph.
  std::map<int, int> color;  // 0/absent=white, 1=gray, 2=black
  for (int v0 = 0; v0 < quiver_.n_vertices(); ++v0) {
    struct Frame {
      int sid;
      std::size_t next_arrow = 0;
      int via = -1;
    };
    if (color[v0] == 2) continue;
    std::vector<Frame> stack{{v0, 0, -1}};
    color[v0] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_arrow >= static_cast<std::size_t>(quiver_.n_arrows())) {
        color[f.sid] = 2;
        stack.pop_back();
        continue;
      }
      int a = static_cast<int>(f.next_arrow++);
      int nxt = step(f.sid, a);
      if (nxt < 0) continue;
      if (color[nxt] == 1) {
        // Back edge: reconstruct the pumpable cycle's arrow word.
        std::vector<int> cyc{a};
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          if (it->sid == nxt) break;
          cyc.push_back(it->via);
        }
        std::reverse(cyc.begin(), cyc.end());
        Path wit;
        wit.arrows = cyc;
        throw SemanticError(
            "algebra is infinite-dimensional: the relation-free path '" +
            path_str(quiver_, wit) + "' at vertex '" +
            quiver_.vertex_name(states[nxt].vertex) + "' can be repeated");
      }
      if (color[nxt] == 0) {
        color[nxt] = 1;
        stack.push_back(Frame{nxt, 0, a});
      }
    }
  }

  // Finite: enumerate the basis level by level in length-lex order.
  std::vector<Path> level;
  for (int v = 0; v < quiver_.n_vertices(); ++v) {
    Path e;
    e.start = v;
    level.push_back(e);
  }
  while (!level.empty()) {
    slices_.emplace_back();
    for (auto& p : level) {
      int idx = static_cast<int>(basis_.size());
      slices_.back().push_back(idx);
      basis_pos_.emplace(p, idx);
      basis_.push_back(p);
    }
    std::vector<Path> next;
    for (const auto& p : level)
      for (int a : quiver_.arrows_from(path_target(quiver_, p))) {
        Path cand = p;
        cand.arrows.push_back(a);
        if (!relation_suffix(relations_, cand.arrows)) next.push_back(cand);
      }
    level = std::move(next);
  }
  while (!slices_.empty() && slices_.back().empty()) slices_.pop_back();
  max_len_ = static_cast<int>(slices_.size()) - 1;
}

std::optional<int> Presentation::basis_index(const Path& p) const {
  auto it = basis_pos_.find(p);
  if (it == basis_pos_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Presentation::slice(int length) const {
  if (length < 0 || length > max_len_) return {};
  return slices_[length];
}

bool Presentation::has_forbidden_factor(const Path& p) const {
  for (const auto& r : relations_) {
    if (r.arrows.size() > p.arrows.size()) continue;
    auto it = std::search(p.arrows.begin(), p.arrows.end(), r.arrows.begin(),
                          r.arrows.end());
    if (it != p.arrows.end()) return true;
  }
  return false;
}

std::optional<int> Presentation::mult(int p_idx, int q_idx) const {
  const Path& p = basis_[p_idx];
  const Path& q = basis_[q_idx];
  if (!path_composable(quiver_, p, q)) return std::nullopt;
  return basis_index(path_concat(p, q));
}

bool Presentation::is_rsz() const {
  for (const auto& r : relations_)
    if (r.length() != 2) return false;
  // Every length-2 path must be a relation.
  std::set<std::vector<int>> rel;
  for (const auto& r : relations_) rel.insert(r.arrows);
  for (int a = 0; a < quiver_.n_arrows(); ++a)
    for (int b : quiver_.arrows_from(quiver_.arrow(a).tgt))
      if (!rel.count({a, b})) return false;
  return true;
}

std::vector<int> slice_sizes(const Presentation& p) {
  std::vector<int> out;
  for (int l = 0; l <= p.max_basis_length(); ++l)
    out.push_back(static_cast<int>(p.slice(l).size()));
  return out;
}

Presentation restrict_to_component(const Presentation& p, int component_id) {
  const Quiver& q = p.quiver();
  auto comp = q.components();
  Quiver sub;
  std::vector<int> vmap(q.n_vertices(), -1);
  for (int v = 0; v < q.n_vertices(); ++v)
    if (comp[v] == component_id) vmap[v] = sub.add_vertex(q.vertex_name(v));
  if (sub.n_vertices() == 0)
    throw SemanticError("no such connected component");
  std::vector<int> amap(q.n_arrows(), -1);
  for (int a = 0; a < q.n_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (comp[ar.src] == component_id)
      amap[a] = sub.add_arrow(ar.name, vmap[ar.src], vmap[ar.tgt]);
  }
  std::vector<Path> rels;
  for (const Path& r : p.relations())
    if (comp[path_source(q, r)] == component_id) {
      Path m = r;
      m.start = vmap[path_source(q, r)];
      for (int& a : m.arrows) a = amap[a];
      rels.push_back(std::move(m));
    }
  return Presentation(std::move(sub), std::move(rels));
}

}  // namespace qhh
