#pragma once

// Brute-force reference implementations. None of these call into the
// algorithms they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "bary/complex.hpp"
#include "bary/graph.hpp"
#include "bary/orientation.hpp"

namespace bary::oracle {

/// Nonempty subsets of [n] contained in some facet, by scanning all 2^n sets.
std::vector<VertexSet> faces_by_scan(const SimplicialComplex& complex);

/// N(Δ) by scanning all 2^n subsets of the ground set.
std::vector<VertexSet> minimal_nonfaces_by_scan(const SimplicialComplex& complex);

/// Tries every permutation of the ground set (equal ground sizes only).
bool isomorphic_by_permutations(const SimplicialComplex& a, const SimplicialComplex& b);

/// Tries every vertex permutation.
bool graphs_isomorphic_by_permutations(const LabeledGraph& a, const LabeledGraph& b);

/// Own transitivity test on an explicit arrow matrix.
bool orientation_is_transitive(const LabeledGraph& graph, const Orientation& o);

/// Every one of the 2^|E| orientations, filtered; sorted.
std::vector<Orientation> orientations_by_enumeration(const LabeledGraph& graph);

/// Edge-by-edge backtracking, rejecting a partial assignment as soon as a
/// fully assigned two-edge path lacks its closing arrow; sorted.
std::vector<Orientation> orientations_by_backtracking(const LabeledGraph& graph);

/// Number of maximal chains of the face poset, by DFS along cover relations.
std::uint64_t count_maximal_chains(const SimplicialComplex& complex);

/// Edges join strictly comparable faces, found by scanning all pairs.
LabeledGraph comparability_graph_by_definition(const SimplicialComplex& complex);

SimplicialComplex random_complex(std::mt19937_64& rng, int ground_size, int max_facets);
LabeledGraph random_graph(std::mt19937_64& rng, int vertex_count, double edge_probability);
SimplicialComplex random_relabeling(std::mt19937_64& rng, const SimplicialComplex& complex);

LabeledGraph cycle_graph(int n);
LabeledGraph complete_graph(int n);
LabeledGraph path_graph(int n);

}  // namespace bary::oracle
