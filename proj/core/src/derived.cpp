#include "bary/derived.hpp"

#include <algorithm>

#include "bary/error.hpp"

namespace bary {

Subdivision barycentric_subdivision(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw Error(ErrorCode::VoidComplex, "the void complex has no subdivision");
  }
  if (complex.is_empty()) {
    throw Error(ErrorCode::EmptyInput, "the empty complex has no nonempty faces");
  }
  // A facet with 7 or more vertices alone has over 64 nonempty faces.
  for (VertexSet f : complex.facets()) {
    if (f.size() > 6) {
      throw Error(ErrorCode::GroundSetTooLarge,
                  "subdivision needs more than 64 vertices (facet " + f.to_string() + ")");
    }
  }
  std::vector<VertexSet> labels = faces(complex);
  if (labels.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(ErrorCode::GroundSetTooLarge,
                "subdivision needs " + std::to_string(labels.size()) + " vertices");
  }
  auto index_of = [&](VertexSet face) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), face) - labels.begin()) + 1;
  };

  // Maximal chains of a simplicial face poset are the orderings of a facet's
  // vertices: {a1} < {a1,a2} < ... < F.
  std::vector<VertexSet> chains;
  for (VertexSet f : complex.facets()) {
    std::vector<int> order = f.elements();
    do {
      VertexSet prefix;
      VertexSet chain;
      for (int v : order) {
        prefix = prefix.with(v);
        chain = chain.with(index_of(prefix));
      }
      chains.push_back(chain);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  const int vertex_count = static_cast<int>(labels.size());
  return Subdivision{SimplicialComplex::from_facets(vertex_count, std::move(chains)),
                     FaceLabeling{std::move(labels)}};
}

SimplicialComplex iterated_subdivision(const SimplicialComplex& complex, int k) {
  if (k < 1) {
    throw Error(ErrorCode::MalformedInput, "subdivision count must be positive");
  }
  SimplicialComplex current = complex;
  for (int i = 0; i < k; ++i) current = barycentric_subdivision(current).complex;
  return current;
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  const int n = complex.ground_size();
  const std::vector<VertexSet> nonfaces = minimal_nonfaces(complex);
  if (nonfaces.empty()) return SimplicialComplex::void_complex(n);
  const VertexSet ground = VertexSet::range(n);
  std::vector<VertexSet> facets;
  facets.reserve(nonfaces.size());
  for (VertexSet s : nonfaces) facets.push_back(ground - s);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex complement_complex(const SimplicialComplex& complex) {
  const int n = complex.ground_size();
  if (complex.is_void()) return SimplicialComplex::void_complex(n);
  const VertexSet ground = VertexSet::range(n);
  std::vector<VertexSet> facets;
  facets.reserve(complex.facet_count());
  for (VertexSet f : complex.facets()) facets.push_back(ground - f);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<VertexSet> stanley_reisner_generators(const SimplicialComplex& complex) {
  return minimal_nonfaces(complex);
}

std::vector<VertexSet> facet_ideal_generators(const SimplicialComplex& complex) {
  return complex.facets();
}

}  // namespace bary
