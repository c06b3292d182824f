#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bary/complex.hpp"

namespace bary {

struct VerificationReport {
  std::size_t universe_size = 0;
  std::size_t pair_checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

/// Largest n accepted by enumerate_complexes.
inline constexpr int kMaxEnumerationSize = 6;

/**
 * Every complex on [n] in which each {i} is a face. With up_to_iso one
 * canonical representative per isomorphism class is returned, sorted by
 * canonical form. Throws UniverseTooLarge for n > 6.
 */
std::vector<SimplicialComplex> enumerate_complexes(int n, bool up_to_iso);

enum class Universe {
  exactly,  ///< complexes on exactly n vertices
  up_to,    ///< complexes on 1..n vertices
};

/// G(Δ1) ≅ G(Δ2) ⟺ Δ1 ≅ Δ2 for all pairs, and reconstruction recovers Δ.
VerificationReport verify_subdivision_rigidity(int n, Universe universe = Universe::exactly);

/// Outcome of each equivalent condition for one pair. Index 0 is unused.
struct EquivalenceRow {
  std::optional<bool> item[9];

  /// All decided items agree.
  bool consistent() const;
};

/**
 * Conditions compared: isomorphism, duals, complements, subdivisions,
 * double subdivisions, Stanley-Reisner and facet generator sets under the
 * witness, comparability graphs. Double subdivisions beyond 64 vertices are
 * left undecided when both sides exceed the cap.
 */
EquivalenceRow check_equivalence_pair(const SimplicialComplex& a, const SimplicialComplex& b);

VerificationReport verify_equivalences(int n, Universe universe = Universe::exactly);

}  // namespace bary
