#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bary/complex.hpp"
#include "bary/graph.hpp"
#include "bary/orientation.hpp"

namespace bary {

/// Strict order on graph vertices with longest-chain grades.
class FacePoset {
 public:
  FacePoset(int size, std::vector<char> less, std::vector<int> grades);

  int size() const { return size_; }
  bool less(int u, int v) const { return less_[static_cast<std::size_t>(u) * size_ + v] != 0; }
  bool less_equal(int u, int v) const { return u == v || less(u, v); }
  int grade(int v) const { return grades_[v]; }
  const std::vector<int>& grades() const { return grades_; }

  /// Minimal elements, ascending.
  std::vector<int> initial_elements() const;
  /// Maximal elements, ascending.
  std::vector<int> terminal_elements() const;

 private:
  int size_;
  std::vector<char> less_;
  std::vector<int> grades_;
};

/// Throws NotTransitive when the orientation is not transitive.
FacePoset poset_from_orientation(const LabeledGraph& graph, const Orientation& orientation);

struct FacePosetResult {
  std::optional<SimplicialComplex> complex;
  /// Poset element behind ground vertex i + 1.
  std::vector<int> sources;
  /// Empty on success, otherwise the first violated condition.
  std::string failure;
};

/**
 * Tries to read P as the face poset of a complex: vertices are the initial
 * elements, each element becomes the set of initial elements below it.
 */
FacePosetResult complex_from_face_poset(const FacePoset& poset);

enum class ReconstructionStatus { ok, not_orientable, not_face_poset, not_flag };

std::string_view to_string(ReconstructionStatus status);

struct ReconstructionReport {
  ReconstructionStatus status = ReconstructionStatus::not_face_poset;
  std::optional<SimplicialComplex> complex;
  /// Graph vertex behind ground vertex i + 1 of the result.
  std::vector<int> source_vertices;
  std::size_t orientations_tried = 0;
  /// Some component admitted a complex under more than one orientation.
  bool both_admissible = false;
  std::string detail;
};

/**
 * Rebuilds the complex whose comparability graph is `graph`. Components are
 * handled independently and reassembled on a concatenated ground set.
 * Throws std::logic_error if two orientations admit non-isomorphic
 * complexes.
 */
ReconstructionReport reconstruct_from_comparability_graph(const LabeledGraph& graph);

/// Same as above on the 1-skeleton; status not_flag unless every minimal
/// nonface of the input has two elements.
ReconstructionReport reconstruct_from_subdivision(const SimplicialComplex& subdivision);

bool is_complex_comparability_graph(const LabeledGraph& graph);

}  // namespace bary
