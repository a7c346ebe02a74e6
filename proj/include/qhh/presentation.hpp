// Monomial presentations kQ/<Z>: paths, relation sets, and the path basis.
//
// Paths are stored in traversal order (first arrow traversed first).  The
// composition written multiplicatively elsewhere in the library is function
// order: "q after p" concatenates p's arrows then q's.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhh/linalg.hpp"
#include "qhh/quiver.hpp"

namespace qhh {

// A path: trivial (arrows empty, sits at start) or a composable arrow list.
struct Path {
  int start = -1;             // start vertex (meaningful when arrows empty)
  std::vector<int> arrows;    // traversal order

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }

  bool operator==(const Path& o) const {
    if (arrows.empty() && o.arrows.empty()) return start == o.start;
    return arrows == o.arrows;
  }
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows.empty()) return start < o.start;
    return arrows < o.arrows;  // length-lex
  }
};

class Presentation;

int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& p, const Path& then);
// Concatenation p followed by `then` (caller checks composability).
Path path_concat(const Path& p, const Path& then);
std::string path_str(const Quiver& q, const Path& p);

// A bound quiver algebra kQ/<Z> with Z a set of paths of length >= 2 that is
// an antichain under the factor (contiguous subpath) order.  Validation and
// the basis are computed eagerly; an infinite-dimensional quotient is
// rejected with a witness cycle in the exception message.
class Presentation {
 public:
  Presentation(Quiver q, std::vector<Path> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }

  // The monomial basis: all Z-factor-free paths in length-lex order
  // (trivial paths first, arrows next, then longer paths).
  const std::vector<Path>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::optional<int> basis_index(const Path& p) const;

  // Indices of basis paths of the given length (empty when out of range).
  std::vector<int> slice(int length) const;
  int max_basis_length() const { return max_len_; }

  // True iff some relation has p as a contiguous factor.
  bool has_forbidden_factor(const Path& p) const;
  bool is_basis_path(const Path& p) const { return !has_forbidden_factor(p); }

  // Product q.p ("q after p") in the algebra: the basis index of the
  // concatenation, nullopt when the endpoints mismatch or the product is 0.
  std::optional<int> mult(int p_idx, int q_idx) const;

  // Radical square zero: every relation has length 2 and every length-2
  // path is a relation.
  bool is_rsz() const;

 private:
  void validate_relations() const;
  void build_basis();

  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<Path> basis_;
  std::map<Path, int> basis_pos_;
  std::vector<std::vector<int>> slices_;  // per length
  int max_len_ = 0;
};

// Lengths of the slices as used in the pair complexes, via exact counts.
std::vector<int> slice_sizes(const Presentation& p);

// The sub-presentation on one connected component of the quiver (vertices,
// arrows, and relations supported on it), with names preserved.
Presentation restrict_to_component(const Presentation& p, int component_id);

}  // namespace qhh
