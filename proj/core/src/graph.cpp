#include "bary/graph.hpp"

#include <algorithm>
#include <string>

#include "bary/error.hpp"

namespace bary {

LabeledGraph::LabeledGraph(int vertex_count, std::vector<Edge> edges,
                           std::optional<FaceLabeling> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorCode::MalformedInput, "negative vertex count");
  }
  if (labels_ && static_cast<int>(labels_->faces.size()) != vertex_count_) {
    throw Error(ErrorCode::MalformedInput, "label table does not match the vertex count");
  }
  for (Edge& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= vertex_count_) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge [" + std::to_string(e.first) + "," + std::to_string(e.second) +
                      "] outside the vertex range");
    }
    if (e.first == e.second) {
      throw Error(ErrorCode::MalformedInput, "loop at vertex " + std::to_string(e.first));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  const auto n = static_cast<std::size_t>(vertex_count_);
  adjacency_.assign(n * n, 0);
  edge_slot_.assign(n * n, -1);
  neighbors_.assign(n, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[u * n + v] = adjacency_[v * n + u] = 1;
    edge_slot_[u * n + v] = edge_slot_[v * n + u] = static_cast<int>(i);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

int LabeledGraph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return -1;
  return edge_slot_[static_cast<std::size_t>(u) * vertex_count_ + v];
}

}  // namespace bary
