// Finite quivers: vertices, named arrows, underlying-graph invariants.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhh {

struct Arrow {
  std::string name;
  int src = -1;
  int tgt = -1;
};

// A finite quiver with named vertices and arrows.  Indices are assigned in
// insertion order and used everywhere downstream, so input order is the
// single source of determinism.
class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int tgt);

  int n_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int n_arrows() const { return static_cast<int>(arrows_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& name) const;

  const std::vector<int>& arrows_from(int v) const { return out_[v]; }
  const std::vector<int>& arrows_to(int v) const { return in_[v]; }

  bool is_isolated(int v) const { return out_[v].empty() && in_[v].empty(); }
  bool is_source(int v) const { return in_[v].empty(); }
  bool is_sink(int v) const { return out_[v].empty(); }

  // --- underlying graph -----------------------------------------------------

  // Connected components of the underlying (undirected) graph; returns a
  // component id per vertex, ids numbered by first appearance.
  std::vector<int> components() const;
  int n_components() const;

  // Components of the underlying graph with one vertex removed (the vertex
  // keeps id -1).  Used for junction-side partitions.
  std::vector<int> components_without(int removed) const;

  // First Betti number chi(Q) = |Q1| - |Q0| + c of the underlying graph:
  // the rank of the fundamental group of a connected quiver.
  int euler_rank() const;

  // --- parallel structure ----------------------------------------------------

  // Parallel classes: arrows grouped by (src, tgt); classes ordered by their
  // smallest arrow index, members in index order.
  std::vector<std::vector<int>> parallel_classes() const;

  // Betti number of the reduced quiver (one arrow kept per parallel class).
  int reduced_euler_rank() const;

  // Parallel classes not in the input-order spanning forest of the reduced
  // underlying graph: a class is listed iff its endpoints are already
  // connected by classes with smaller leading arrow index (loops included).
  // There are exactly reduced_euler_rank() of them.
  std::vector<std::vector<int>> nontree_parallel_classes() const;

  // --- special shapes ---------------------------------------------------------

  // A crown: connected, |Q0| = |Q1|, and every vertex has exactly one
  // incoming and one outgoing arrow (a single oriented cycle).
  bool is_crown() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_by_name_;
  std::map<std::string, int> arrow_by_name_;
  std::vector<std::vector<int>> out_, in_;
};

}  // namespace qhh
