#pragma once

#include <vector>

#include "bary/complex.hpp"
#include "bary/graph.hpp"

namespace bary {

struct Subdivision {
  SimplicialComplex complex;
  FaceLabeling labeling;
};

/**
 * Δ♭: one vertex per nonempty face of Δ, numbered in the deterministic face
 * order, with the maximal chains of the face poset as facets. Throws
 * VoidComplex for the void complex, EmptyInput for {∅} and GroundSetTooLarge
 * when Δ has more than 64 faces.
 */
Subdivision barycentric_subdivision(const SimplicialComplex& complex);

/// k-fold subdivision, k >= 1.
SimplicialComplex iterated_subdivision(const SimplicialComplex& complex, int k);

/// Facets are the complements of the minimal nonfaces. The dual of the
/// full simplex is the void complex and vice versa.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Facets are the complements of the facets.
SimplicialComplex complement_complex(const SimplicialComplex& complex);

/// Supports of the minimal monomial generators of the Stanley-Reisner ideal.
std::vector<VertexSet> stanley_reisner_generators(const SimplicialComplex& complex);

/// Supports of the monomial generators of the facet ideal.
std::vector<VertexSet> facet_ideal_generators(const SimplicialComplex& complex);

}  // namespace bary
