#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "bary/complex.hpp"

namespace bary {

/**
 * Relabeling-invariant fingerprint of a complex. Vertices lying in some
 * facet receive the labels 1..k, unused ground vertices come after them, so
 * two forms with equal facet encodings describe isomorphic complexes even
 * when their ground sets differ in size.
 */
struct CanonicalForm {
  int ground_size = 0;
  bool is_void = false;
  std::vector<VertexSet> facet_encoding;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// Ground vertex v maps to canonical label relabeling[v - 1].
  std::vector<int> relabeling;
};

CanonicalLabeling canonical_labeling(const SimplicialComplex& complex);
CanonicalForm canonical_form(const SimplicialComplex& complex);

/// Bijection between ground sets; image[v - 1] is the target of source
/// vertex v. Entries are 0 only for unused source vertices that have no
/// unused partner when the ground sizes differ.
struct VertexBijection {
  std::vector<int> image;

  bool operator==(const VertexBijection&) const = default;
};

/// Applies image to every facet of `from` and checks the result equals the
/// facet set of `to` (unused vertices aside).
bool is_isomorphism(const VertexBijection& map, const SimplicialComplex& from,
                    const SimplicialComplex& to);

/**
 * A witness bijection carrying the facets of `a` onto the facets of `b`, or
 * nothing. Disconnected inputs are matched component by component; unused
 * ground vertices are matched to each other.
 */
std::optional<VertexBijection> are_isomorphic(const SimplicialComplex& a,
                                              const SimplicialComplex& b);

}  // namespace bary
