#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mapcount {

// Shape data of a rooted map viewed as a pattern: root-face valency, edge
// counts relative to the root face, inner-face valencies, and the number of
// root-face reroots that reproduce the same rooted map.
struct PatternDescriptor {
  int ell = 0;                        // root-face valency
  int inner_edges = 0;                // edges not incident to the root face
  int outer_edges = 0;                // bridges incident to the root face
  int inner_valency_sum = 0;          // sum of inner-face valencies
  std::vector<int> inner_valencies;   // sorted ascending
  int rotational_count = 1;

  friend bool operator==(const PatternDescriptor&, const PatternDescriptor&) = default;
};

// Rooted map on the sphere as a rotation system: half-edges 0..2E-1, a
// fixed-point-free involution alpha pairing the two halves of each edge, a
// permutation sigma giving the rotation around each vertex, and a root
// half-edge. Faces are the orbits of h -> sigma(alpha(h)); the root face is
// the orbit of the root. Values are immutable once constructed.
class CombinatorialMap {
 public:
  // Checks that alpha is a fixed-point-free involution (NotInvolution), that
  // sigma is a permutation, that the structure is connected (NotConnected),
  // and that V - E + F = 2 (NotPlanar).
  static CombinatorialMap validated(std::vector<int> alpha, std::vector<int> sigma,
                                    int root);

  // The map with no edges: one vertex, one face. It takes part in counting
  // but has no pattern descriptor.
  static CombinatorialMap empty_map();

  bool is_empty() const { return alpha_.empty(); }
  int edge_count() const { return static_cast<int>(alpha_.size()) / 2; }
  int half_edge_count() const { return static_cast<int>(alpha_.size()); }
  int root() const { return root_; }

  int alpha(int h) const { return alpha_[h]; }
  int sigma(int h) const { return sigma_[h]; }
  // Successor along the face to the fixed side of h.
  int face_next(int h) const { return sigma_[alpha_[h]]; }

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(face_cycles_.size()); }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int face_of(int h) const { return face_of_[h]; }
  int root_face() const { return face_of_[root_]; }
  int face_valency(int f) const { return static_cast<int>(face_cycles_[f].size()); }
  // Half-edges of each face in face_next order.
  const std::vector<std::vector<int>>& face_cycles() const { return face_cycles_; }

  // Edges as (h, alpha(h)) pairs with h < alpha(h), ordered by h.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // An edge borders the same face on both sides exactly when it is a bridge.
  bool is_bridge(int h) const { return face_of_[h] == face_of_[alpha_[h]]; }

  // Relabeling-invariant byte string: equal codes mean the rooted maps are
  // isomorphic (labels traversed breadth-first from the root).
  std::string canonical_code() const;

  CombinatorialMap rerooted(int new_root) const;

  // Number of reroots onto the root face whose rooted map is isomorphic to
  // this one; the identity always counts.
  int rotational_iso_count() const;

  PatternDescriptor descriptor() const;

 private:
  CombinatorialMap() = default;
  void build_incidence();

  std::vector<int> alpha_, sigma_;
  int root_ = -1;
  int vertex_count_ = 0;
  std::vector<int> vertex_of_, face_of_;
  std::vector<std::vector<int>> face_cycles_;
  std::vector<std::pair<int, int>> edges_;
};

namespace detail {
// Canonical code on raw rotation-system arrays; the member function and the
// exhaustive enumerator share this single implementation.
std::string canonical_code(const std::vector<int>& sigma, const std::vector<int>& alpha,
                           int root);
}  // namespace detail

}  // namespace mapcount
