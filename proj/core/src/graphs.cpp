#include "bary/graphs.hpp"

#include <algorithm>
#include <bit>

#include "bary/error.hpp"

namespace bary {

namespace {

void collect_maximal_cliques(std::uint64_t clique, std::uint64_t candidates, std::uint64_t excluded,
                             const std::vector<std::uint64_t>& adjacency,
                             std::vector<VertexSet>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(VertexSet::from_bits(clique));
    return;
  }
  // Tomita pivot: the vertex covering most candidates.
  int pivot = -1;
  int best = -1;
  for (std::uint64_t rest = candidates | excluded; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int covered = std::popcount(candidates & adjacency[u]);
    if (covered > best) {
      best = covered;
      pivot = u;
    }
  }
  for (std::uint64_t rest = candidates & ~adjacency[pivot]; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const std::uint64_t bit = std::uint64_t{1} << v;
    collect_maximal_cliques(clique | bit, candidates & adjacency[v], excluded & adjacency[v],
                            adjacency, out);
    candidates &= ~bit;
    excluded |= bit;
  }
}

SimplicialComplex complex_of_cliques(int n, const std::vector<std::uint64_t>& adjacency) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "graph has no vertices");
  if (n > kMaxGroundSize) {
    throw Error(ErrorCode::GroundSetTooLarge,
                "graph with " + std::to_string(n) + " vertices exceeds the 64-vertex ground set");
  }
  std::vector<VertexSet> cliques;
  collect_maximal_cliques(0, VertexSet::range(n).bits(), 0, adjacency, cliques);
  return SimplicialComplex::from_facets(n, std::move(cliques));
}

}  // namespace

LabeledGraph graph_complement(const LabeledGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!graph.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return LabeledGraph(n, std::move(edges), graph.labels());
}

SimplicialComplex clique_complex(const LabeledGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(std::min(n, kMaxGroundSize)), 0);
  if (n <= kMaxGroundSize) {
    for (const auto& [u, v] : graph.edges()) {
      adjacency[u] |= std::uint64_t{1} << v;
      adjacency[v] |= std::uint64_t{1} << u;
    }
  }
  return complex_of_cliques(n, adjacency);
}

SimplicialComplex independence_complex(const LabeledGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(std::min(n, kMaxGroundSize)), 0);
  if (n <= kMaxGroundSize) {
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int u = 0; u < n; ++u) {
      std::uint64_t neighbours = 0;
      for (int v : graph.neighbors(u)) neighbours |= std::uint64_t{1} << v;
      adjacency[u] = all & ~neighbours & ~(std::uint64_t{1} << u);
    }
  }
  return complex_of_cliques(n, adjacency);
}

LabeledGraph comparability_graph(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw Error(ErrorCode::VoidComplex, "the void complex has no comparability graph");
  }
  std::vector<VertexSet> labels = faces(complex);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i].is_proper_subset_of(labels[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  const int n = static_cast<int>(labels.size());
  return LabeledGraph(n, std::move(edges), FaceLabeling{std::move(labels)});
}

std::vector<std::vector<int>> graph_components(const LabeledGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> members{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : graph.neighbors(members[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& graph, const std::vector<int>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (graph.adjacent(vertices[a], vertices[b])) {
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  std::optional<FaceLabeling> labels;
  if (graph.labels()) {
    labels.emplace();
    for (int v : vertices) labels->faces.push_back(graph.labels()->faces[v]);
  }
  return LabeledGraph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

CanonicalForm graph_canonical_form(const LabeledGraph& graph) {
  return canonical_form(clique_complex(graph));
}

bool are_isomorphic_graphs(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const LabeledGraph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  if (a.vertex_count() == 0) return true;
  return graph_canonical_form(a) == graph_canonical_form(b);
}

}  // namespace bary
