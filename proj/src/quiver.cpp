#include "qhh/quiver.hpp"

#include <numeric>
#include <stdexcept>

namespace qhh {

namespace {

// Union-find on vertex ids.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

int Quiver::add_vertex(const std::string& name) {
  if (vertex_by_name_.count(name))
    throw std::invalid_argument("duplicate vertex name '" + name + "'");
  if (arrow_by_name_.count(name))
    throw std::invalid_argument("name '" + name + "' already used for an arrow");
  int id = n_vertices();
  vertex_names_.push_back(name);
  vertex_by_name_.emplace(name, id);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
  if (src < 0 || src >= n_vertices() || tgt < 0 || tgt >= n_vertices())
    throw std::invalid_argument("arrow '" + name + "' has an unknown endpoint");
  if (arrow_by_name_.count(name))
    throw std::invalid_argument("duplicate arrow name '" + name + "'");
  if (vertex_by_name_.count(name))
    throw std::invalid_argument("name '" + name + "' already used for a vertex");
  int id = n_arrows();
  arrows_.push_back(Arrow{name, src, tgt});
  arrow_by_name_.emplace(name, id);
  out_[src].push_back(id);
  in_[tgt].push_back(id);
  return id;
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::components() const {
  Dsu dsu(n_vertices());
  for (const auto& a : arrows_) dsu.unite(a.src, a.tgt);
  std::vector<int> id(n_vertices(), -1);
  int next = 0;
  for (int v = 0; v < n_vertices(); ++v) {
    int r = dsu.find(v);
    if (id[r] < 0) id[r] = next++;
    id[v] = id[r];
  }
  return id;
}

int Quiver::n_components() const {
  auto id = components();
  int c = 0;
  for (int x : id) c = std::max(c, x + 1);
  return c;
}

std::vector<int> Quiver::components_without(int removed) const {
  Dsu dsu(n_vertices());
  for (const auto& a : arrows_)
    if (a.src != removed && a.tgt != removed) dsu.unite(a.src, a.tgt);
  std::vector<int> id(n_vertices(), -1);
  int next = 0;
  for (int v = 0; v < n_vertices(); ++v) {
    if (v == removed) continue;
    int r = dsu.find(v);
    if (id[r] < 0) id[r] = next++;
    id[v] = id[r];
  }
  id[removed] = -1;
  return id;
}

int Quiver::euler_rank() const {
  return n_arrows() - n_vertices() + n_components();
}

std::vector<std::vector<int>> Quiver::parallel_classes() const {
  std::map<std::pair<int, int>, int> slot;  // (src,tgt) -> class index
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n_arrows(); ++a) {
    auto key = std::make_pair(arrows_[a].src, arrows_[a].tgt);
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, static_cast<int>(classes.size()));
      classes.push_back({a});
    } else {
      classes[it->second].push_back(a);
    }
  }
  return classes;  // ordered by smallest member, members ascending
}

int Quiver::reduced_euler_rank() const {
  return static_cast<int>(parallel_classes().size()) - n_vertices() +
         n_components();
}

std::vector<std::vector<int>> Quiver::nontree_parallel_classes() const {
  Dsu dsu(n_vertices());
  std::vector<std::vector<int>> out;
  for (auto& cls : parallel_classes()) {
    const Arrow& a = arrows_[cls.front()];
    if (!dsu.unite(a.src, a.tgt)) out.push_back(cls);
  }
  return out;
}

bool Quiver::is_crown() const {
  if (n_vertices() == 0 || n_vertices() != n_arrows()) return false;
  if (n_components() != 1) return false;
  for (int v = 0; v < n_vertices(); ++v)
    if (out_[v].size() != 1 || in_[v].size() != 1) return false;
  return true;
}

}  // namespace qhh
