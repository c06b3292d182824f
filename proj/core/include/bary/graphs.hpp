#pragma once

#include <vector>

#include "bary/canonical.hpp"
#include "bary/complex.hpp"
#include "bary/graph.hpp"

namespace bary {

/// Same vertices, complementary edge set. Labels are kept.
LabeledGraph graph_complement(const LabeledGraph& graph);

/// Maximal cliques as facets; vertex i becomes ground element i + 1.
SimplicialComplex clique_complex(const LabeledGraph& graph);

/// Maximal independent sets as facets.
SimplicialComplex independence_complex(const LabeledGraph& graph);

/// G(Δ): the 1-skeleton of Δ♭, labeled by faces.
LabeledGraph comparability_graph(const SimplicialComplex& complex);

/// Vertex lists of connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> graph_components(const LabeledGraph& graph);

/// Subgraph on `vertices` (sorted); vertex j of the result is vertices[j].
LabeledGraph induced_subgraph(const LabeledGraph& graph, const std::vector<int>& vertices);

/// Fingerprint for graph isomorphism: canonical form of the clique complex.
CanonicalForm graph_canonical_form(const LabeledGraph& graph);

bool are_isomorphic_graphs(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace bary
