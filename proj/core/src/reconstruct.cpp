#include "bary/reconstruct.hpp"

#include <algorithm>
#include <stdexcept>

#include "bary/canonical.hpp"
#include "bary/error.hpp"
#include "bary/graphs.hpp"

namespace bary {

FacePoset::FacePoset(int size, std::vector<char> less, std::vector<int> grades)
    : size_(size), less_(std::move(less)), grades_(std::move(grades)) {}

std::vector<int> FacePoset::initial_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size_; ++v) {
    bool minimal = true;
    for (int u = 0; u < size_ && minimal; ++u) minimal = !less(u, v);
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<int> FacePoset::terminal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size_; ++v) {
    bool maximal = true;
    for (int w = 0; w < size_ && maximal; ++w) maximal = !less(v, w);
    if (maximal) out.push_back(v);
  }
  return out;
}

FacePoset poset_from_orientation(const LabeledGraph& graph, const Orientation& orientation) {
  if (orientation.reversed.size() != graph.edge_count()) {
    throw Error(ErrorCode::MalformedInput, "orientation does not match the graph");
  }
  if (!is_transitive(graph, orientation)) {
    throw Error(ErrorCode::NotTransitive, "orientation is not transitive");
  }
  const int n = graph.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  std::vector<char> less(un * un, 0);
  std::vector<int> below(un, 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const int t = orientation.tail(graph, e);
    const int h = orientation.head(graph, e);
    less[t * un + h] = 1;
    ++below[h];
  }
  // In a strict order every predecessor has fewer predecessors.
  std::vector<int> order(un);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> grades(un, 0);
  for (int v : order) {
    for (int u = 0; u < n; ++u) {
      if (less[u * un + v]) grades[v] = std::max(grades[v], grades[u] + 1);
    }
  }
  return FacePoset(n, std::move(less), std::move(grades));
}

FacePosetResult complex_from_face_poset(const FacePoset& poset) {
  FacePosetResult result;
  const int n = poset.size();
  if (n == 0) {
    result.failure = "empty_poset";
    return result;
  }
  result.sources = poset.initial_elements();
  if (result.sources.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    result.failure = "too_many_initial_elements";
    return result;
  }

  // A(v): the initial elements below or equal to v.
  std::vector<VertexSet> span(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < result.sources.size(); ++i) {
    const int s = result.sources[i];
    for (int v = 0; v < n; ++v) {
      if (poset.less_equal(s, v)) span[v] = span[v].with(static_cast<int>(i) + 1);
    }
  }

  std::vector<VertexSet> distinct = span;
  sort_unique(distinct);
  if (distinct.size() != span.size()) {
    result.failure = "not_injective";
    return result;
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && poset.less(u, v) != span[u].is_proper_subset_of(span[v])) {
        result.failure = "order_mismatch";
        return result;
      }
    }
  }

  std::vector<VertexSet> tops;
  for (int t : poset.terminal_elements()) {
    // A top with k vertices alone forces 2^k - 1 faces.
    if (span[t].size() >= 63 || (std::uint64_t{1} << span[t].size()) - 1 > static_cast<std::uint64_t>(n)) {
      result.failure = "face_set_mismatch";
      return result;
    }
    tops.push_back(span[t]);
  }
  SimplicialComplex complex =
      SimplicialComplex::from_facets(static_cast<int>(result.sources.size()), std::move(tops));
  if (faces(complex) != distinct) {
    result.failure = "face_set_mismatch";
    return result;
  }
  result.complex = std::move(complex);
  return result;
}

std::string_view to_string(ReconstructionStatus status) {
  switch (status) {
    case ReconstructionStatus::ok: return "ok";
    case ReconstructionStatus::not_orientable: return "not_orientable";
    case ReconstructionStatus::not_face_poset: return "not_face_poset";
    case ReconstructionStatus::not_flag: return "not_flag";
  }
  return "unknown";
}

ReconstructionReport reconstruct_from_comparability_graph(const LabeledGraph& graph) {
  if (graph.vertex_count() == 0) {
    throw Error(ErrorCode::EmptyInput, "graph has no vertices");
  }
  ReconstructionReport report;
  std::vector<VertexSet> facets;
  int offset = 0;

  for (const std::vector<int>& members : graph_components(graph)) {
    const LabeledGraph part = induced_subgraph(graph, members);
    const std::vector<Orientation> orientations = transitive_orientations(part);
    report.orientations_tried += orientations.size();
    if (orientations.empty()) {
      report.status = ReconstructionStatus::not_orientable;
      report.detail = "component of vertex " + std::to_string(members.front()) +
                      " has no transitive orientation";
      return report;
    }

    std::vector<FacePosetResult> admitted;
    std::string first_failure;
    for (const Orientation& o : orientations) {
      FacePosetResult r = complex_from_face_poset(poset_from_orientation(part, o));
      if (r.complex) {
        admitted.push_back(std::move(r));
      } else if (first_failure.empty()) {
        first_failure = r.failure;
      }
    }
    if (admitted.empty()) {
      report.status = ReconstructionStatus::not_face_poset;
      report.detail = "component of vertex " + std::to_string(members.front()) + ": " + first_failure;
      return report;
    }
    if (admitted.size() > 1) {
      report.both_admissible = true;
      for (std::size_t i = 1; i < admitted.size(); ++i) {
        if (!are_isomorphic(*admitted.front().complex, *admitted[i].complex)) {
          throw std::logic_error("two orientations admit non-isomorphic complexes");
        }
      }
    }

    const FacePosetResult& chosen = admitted.front();
    const int size = chosen.complex->ground_size();
    if (offset + size > kMaxGroundSize) {
      throw Error(ErrorCode::GroundSetTooLarge, "reconstructed complex exceeds 64 vertices");
    }
    for (VertexSet f : chosen.complex->facets()) {
      facets.push_back(VertexSet::from_bits(f.bits() << offset));
    }
    for (int s : chosen.sources) report.source_vertices.push_back(members[s]);
    offset += size;
  }

  report.status = ReconstructionStatus::ok;
  report.complex = SimplicialComplex::from_facets(offset, std::move(facets));
  return report;
}

ReconstructionReport reconstruct_from_subdivision(const SimplicialComplex& subdivision) {
  for (VertexSet nonface : minimal_nonfaces(subdivision)) {
    if (nonface.size() != 2) {
      ReconstructionReport report;
      report.status = ReconstructionStatus::not_flag;
      report.detail = "minimal nonface " + nonface.to_string() + " does not have two elements";
      return report;
    }
  }
  return reconstruct_from_comparability_graph(one_skeleton_graph(subdivision));
}

bool is_complex_comparability_graph(const LabeledGraph& graph) {
  if (graph.vertex_count() == 0) return false;
  return reconstruct_from_comparability_graph(graph).status == ReconstructionStatus::ok;
}

}  // namespace bary
