#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bary/graph.hpp"
#include "bary/vertex_set.hpp"

namespace bary {

/**
 * A simplicial complex on the ground set [n], n <= 64, stored as its facet
 * antichain in deterministic order.
 *
 * Two degenerate values are representable:
 *  - the empty complex {∅}: its only facet is the empty set;
 *  - the void complex: no faces at all, not even ∅.
 * Ground vertices are allowed to lie in no facet, so Alexander duals and
 * complements stay first-class values.
 */
class SimplicialComplex {
 public:
  /// Keeps the inclusion-maximal inputs. An empty list yields {∅}.
  /// Throws GroundSetTooLarge, EmptyInput (ground size 0) or VertexOutOfRange.
  static SimplicialComplex from_facets(int ground_size, std::vector<VertexSet> facets);

  static SimplicialComplex empty_complex(int ground_size);
  static SimplicialComplex void_complex(int ground_size);
  /// The full simplex on [ground_size].
  static SimplicialComplex simplex(int ground_size);

  int ground_size() const { return ground_size_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return void_; }
  /// True for {∅}.
  bool is_empty() const { return !void_ && facets_.size() == 1 && facets_.front().empty(); }

  /// Union of all facets.
  VertexSet vertex_set() const;
  /// Every ground vertex i has {i} as a face.
  bool has_all_vertices() const { return vertex_set() == VertexSet::range(ground_size_); }
  bool contains_face(VertexSet face) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int ground_size, std::vector<VertexSet> facets, bool is_void)
      : ground_size_(ground_size), facets_(std::move(facets)), void_(is_void) {}

  int ground_size_ = 1;
  std::vector<VertexSet> facets_;
  bool void_ = false;
};

/// Image of a complex under vertex i -> image[i - 1]; image is a permutation of [n].
SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& image);

/// All nonempty faces in deterministic order. The empty face is never listed.
std::vector<VertexSet> faces(const SimplicialComplex& complex);

/// f[i] = number of faces of dimension i.
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// -1 for the empty and the void complex.
int dimension(const SimplicialComplex& complex);

/// N(Δ): inclusion-minimal subsets of [n] that are not faces.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

/// Faces of size at most i + 1. Requires 0 <= i <= dimension.
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);

/// Graph on the ground set (vertex i is ground element i + 1) with the
/// 1-dimensional faces as edges.
LabeledGraph one_skeleton_graph(const SimplicialComplex& complex);

/// Connectivity of the 1-skeleton restricted to vertices that lie in a face.
/// A single point is connected; {∅} and the void complex are not.
bool is_connected(const SimplicialComplex& complex);

bool is_pure(const SimplicialComplex& complex);

/// Non-reduced: sum over i >= 0 of (-1)^i f_i.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// A connected component relabeled onto [k]; embedding[j] is the original
/// ground vertex of component vertex j + 1.
struct Component {
  SimplicialComplex complex;
  std::vector<int> embedding;
};

/// Components in order of their smallest original vertex.
std::vector<Component> connected_components(const SimplicialComplex& complex);

/// All facets are the (k)-subsets of the vertex set for a single k.
bool is_skeleton_of_simplex(const SimplicialComplex& complex);

}  // namespace bary
