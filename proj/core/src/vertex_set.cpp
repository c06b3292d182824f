#include "bary/vertex_set.hpp"

#include <algorithm>

#include "bary/error.hpp"

namespace bary {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SkeletonIndexOutOfRange: return "SkeletonIndexOutOfRange";
    case ErrorCode::VoidComplex: return "VoidComplex";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotAFacePoset: return "NotAFacePoset";
    case ErrorCode::NotTransitivelyOrientable: return "NotTransitivelyOrientable";
    case ErrorCode::NotFlag: return "NotFlag";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {

std::uint64_t bits_of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int v : elements) {
    if (v < 1 || v > kMaxGroundSize) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 1..64");
    }
    bits |= std::uint64_t{1} << (v - 1);
  }
  return bits;
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> elements)
    : bits_(bits_of(std::span<const int>(elements.begin(), elements.size()))) {}

VertexSet::VertexSet(std::span<const int> elements) : bits_(bits_of(elements)) {}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  sort_unique(sets);
  std::vector<VertexSet> out;
  // Larger sets come later in the order, so scan from the back.
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    const bool covered = std::any_of(out.begin(), out.end(),
                                     [&](VertexSet kept) { return it->is_subset_of(kept); });
    if (!covered) out.push_back(*it);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  sort_unique(sets);
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    const bool covers = std::any_of(out.begin(), out.end(),
                                    [&](VertexSet kept) { return kept.is_subset_of(s); });
    if (!covers) out.push_back(s);
  }
  return out;
}

}  // namespace bary
