#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "bary/graph.hpp"

namespace bary {

/**
 * Direction of every edge of a graph, indexed like graph.edges(). For edge
 * {u, v} with u < v, reversed[e] == false means u -> v.
 */
struct Orientation {
  std::vector<bool> reversed;

  int tail(const LabeledGraph& graph, std::size_t e) const {
    const Edge& edge = graph.edges()[e];
    return reversed[e] ? edge.second : edge.first;
  }
  int head(const LabeledGraph& graph, std::size_t e) const {
    const Edge& edge = graph.edges()[e];
    return reversed[e] ? edge.first : edge.second;
  }

  Orientation reverse() const;

  /// Lexicographic on the direction bit string.
  auto operator<=>(const Orientation&) const = default;
};

/// True when x -> y and y -> z always come with the edge x -> z.
bool is_transitive(const LabeledGraph& graph, const Orientation& orientation);

inline constexpr std::size_t kDefaultOrientationLimit = 1'000'000;

/**
 * Every transitive orientation, sorted lexicographically by direction bits.
 * Edge directions are grouped into implication classes, one class is
 * decided at a time and the triangle rule propagates forced directions.
 * Throws SearchLimitExceeded once more than `limit` orientations exist.
 */
std::vector<Orientation> transitive_orientations(const LabeledGraph& graph,
                                                 std::size_t limit = kDefaultOrientationLimit);

bool is_transitively_orientable(const LabeledGraph& graph);

}  // namespace bary
