#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bary/vertex_set.hpp"

namespace bary {

/// Vertex i + 1 of a subdivision stands for faces[i] of the source complex.
struct FaceLabeling {
  std::vector<VertexSet> faces;

  bool operator==(const FaceLabeling&) const = default;
};

/// Undirected edge between 0-based vertex indices, always first < second.
using Edge = std::pair<int, int>;

/**
 * Simple undirected graph on vertices 0..n-1. Edges are kept sorted and
 * deduplicated; loops are rejected. Vertices may carry face labels when the
 * graph came out of a complex (comparability graphs).
 */
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(int vertex_count, std::vector<Edge> edges,
               std::optional<FaceLabeling> labels = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::optional<FaceLabeling>& labels() const { return labels_; }

  bool adjacent(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * vertex_count_ + v] != 0;
  }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

  /// Position of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  /// Same vertices and edges; labels are ignored.
  bool same_structure(const LabeledGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

  bool operator==(const LabeledGraph& other) const {
    return same_structure(other) && labels_ == other.labels_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<FaceLabeling> labels_;
  std::vector<char> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> edge_slot_;
};

}  // namespace bary
