#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "bary/canonical.hpp"
#include "bary/derived.hpp"
#include "bary/graphs.hpp"
#include "bary/reconstruct.hpp"
#include "bary/verify.hpp"
#include "build.hpp"
#include "oracles.hpp"

using namespace bary;
using bary::test::code_of;
using bary::test::cx;
using bary::test::sets;

namespace {

Orientation inclusion_orientation(const LabeledGraph& g) {
  Orientation o;
  for (auto [u, v] : g.edges()) {
    o.reversed.push_back(g.labels()->faces[v].is_proper_subset_of(g.labels()->faces[u]));
  }
  return o;
}

std::vector<SimplicialComplex> universe_up_to(int n) {
  std::vector<SimplicialComplex> out;
  for (int k = 1; k <= n; ++k) {
    auto part = enumerate_complexes(k, true);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

TEST_CASE("poset from orientation", "[reconstruct]") {
  const LabeledGraph star(3, {{0, 2}, {1, 2}});
  const auto p = poset_from_orientation(star, Orientation{{false, false}});
  CHECK(p.less(0, 2));
  CHECK(p.less(1, 2));
  CHECK_FALSE(p.less(0, 1));
  CHECK(p.grades() == std::vector<int>{0, 0, 1});
  CHECK(p.initial_elements() == std::vector<int>{0, 1});
  CHECK(p.terminal_elements() == std::vector<int>{2});

  const auto c6 = oracle::cycle_graph(6);
  Orientation zigzag;
  for (auto [u, v] : c6.edges()) zigzag.reversed.push_back(u % 2 == 1);
  const auto hex = poset_from_orientation(c6, zigzag);
  CHECK(hex.initial_elements().size() == 3);
  CHECK(hex.terminal_elements().size() == 3);
  CHECK(*std::max_element(hex.grades().begin(), hex.grades().end()) == 1);

  const auto single = poset_from_orientation(LabeledGraph(1, {}), Orientation{});
  CHECK(single.size() == 1);
  CHECK(single.grade(0) == 0);

  CHECK(code_of([&] { poset_from_orientation(oracle::path_graph(3), Orientation{{false, false}}); }) ==
        ErrorCode::NotTransitive);
  CHECK(code_of([&] { poset_from_orientation(star, Orientation{{false}}); }) == ErrorCode::MalformedInput);
}

TEST_CASE("complex from face poset", "[reconstruct]") {
  const LabeledGraph star(3, {{0, 2}, {1, 2}});
  const auto up = complex_from_face_poset(poset_from_orientation(star, Orientation{{false, false}}));
  REQUIRE(up.complex);
  CHECK(*up.complex == cx(2, {{1, 2}}));
  CHECK(up.sources == std::vector<int>{0, 1});

  const auto chain = complex_from_face_poset(
      poset_from_orientation(oracle::complete_graph(3), Orientation{{false, false, false}}));
  CHECK_FALSE(chain.complex);
  CHECK(chain.failure == "not_injective");

  const auto c4 = oracle::cycle_graph(4);
  Orientation parts_up;
  for (auto [u, v] : c4.edges()) parts_up.reversed.push_back(u % 2 == 1);
  const auto square = complex_from_face_poset(poset_from_orientation(c4, parts_up));
  CHECK_FALSE(square.complex);
  CHECK(square.failure == "not_injective");
}

TEST_CASE("reconstruction examples", "[reconstruct]") {
  const auto path = reconstruct_from_comparability_graph(oracle::path_graph(3));
  REQUIRE(path.status == ReconstructionStatus::ok);
  CHECK(are_isomorphic(*path.complex, cx(2, {{1, 2}})));

  const auto hexagon = reconstruct_from_comparability_graph(oracle::cycle_graph(6));
  REQUIRE(hexagon.status == ReconstructionStatus::ok);
  CHECK(are_isomorphic(*hexagon.complex, bary::test::triangle_boundary()));
  CHECK(hexagon.both_admissible);
  CHECK(hexagon.orientations_tried == 2);

  CHECK(reconstruct_from_comparability_graph(oracle::cycle_graph(5)).status ==
        ReconstructionStatus::not_orientable);
  CHECK(reconstruct_from_comparability_graph(oracle::cycle_graph(3)).status ==
        ReconstructionStatus::not_face_poset);
  CHECK(reconstruct_from_comparability_graph(oracle::cycle_graph(4)).status ==
        ReconstructionStatus::not_face_poset);

  const auto point = reconstruct_from_comparability_graph(LabeledGraph(1, {}));
  REQUIRE(point.status == ReconstructionStatus::ok);
  CHECK(*point.complex == cx(1, {{1}}));
  CHECK(code_of([] { reconstruct_from_comparability_graph(LabeledGraph(0, {})); }) == ErrorCode::EmptyInput);
}

TEST_CASE("reconstruction from a subdivision", "[reconstruct]") {
  const auto edge = reconstruct_from_subdivision(barycentric_subdivision(cx(2, {{1, 2}})).complex);
  REQUIRE(edge.status == ReconstructionStatus::ok);
  CHECK(are_isomorphic(*edge.complex, cx(2, {{1, 2}})));

  const auto hex = reconstruct_from_subdivision(clique_complex(oracle::cycle_graph(6)));
  REQUIRE(hex.status == ReconstructionStatus::ok);
  CHECK(are_isomorphic(*hex.complex, bary::test::triangle_boundary()));

  CHECK(reconstruct_from_subdivision(bary::test::triangle_boundary()).status == ReconstructionStatus::not_flag);
}

TEST_CASE("comparability recognition", "[reconstruct]") {
  CHECK_FALSE(is_complex_comparability_graph(oracle::cycle_graph(3)));
  CHECK_FALSE(is_complex_comparability_graph(oracle::cycle_graph(4)));
  CHECK_FALSE(is_complex_comparability_graph(oracle::cycle_graph(5)));
  CHECK(is_complex_comparability_graph(oracle::cycle_graph(6)));
  CHECK_FALSE(is_complex_comparability_graph(LabeledGraph(0, {})));
}

TEST_CASE("round trip over small complexes", "[reconstruct]") {
  for (const auto& c : universe_up_to(5)) {
    const auto report = reconstruct_from_comparability_graph(comparability_graph(c));
    REQUIRE(report.status == ReconstructionStatus::ok);
    REQUIRE(are_isomorphic(*report.complex, c));
  }
}

TEST_CASE("round trip over random complexes", "[reconstruct]") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 500; ++i) {
    const auto c = oracle::random_complex(rng, 1 + i % 7, 5);
    if (faces(c).size() > 64) continue;
    const auto g = comparability_graph(c);
    const auto report = reconstruct_from_comparability_graph(g);
    REQUIRE(report.status == ReconstructionStatus::ok);
    REQUIRE(are_isomorphic(*report.complex, c));
    REQUIRE(report.source_vertices.size() == static_cast<std::size_t>(report.complex->ground_size()));
    for (int s : report.source_vertices) REQUIRE(g.labels()->faces[s].size() == 1);
  }
}

TEST_CASE("structure of the proof on connected complexes", "[reconstruct]") {
  for (const auto& c : universe_up_to(5)) {
    const auto g = comparability_graph(c);
    const Orientation inc = inclusion_orientation(g);

    const auto poset = poset_from_orientation(g, inc);
    for (int v = 0; v < g.vertex_count(); ++v) {
      REQUIRE(poset.grade(v) == g.labels()->faces[v].size() - 1);
    }

    if (!is_connected(c)) continue;
    const auto reversed = complex_from_face_poset(poset_from_orientation(g, inc.reverse()));
    if (reversed.complex) {
      REQUIRE(is_pure(c));
      REQUIRE(are_isomorphic(*reversed.complex, c));
      if (dimension(c) != 1) REQUIRE(is_skeleton_of_simplex(c));
    }

    bool has_apex = false;
    for (int v = 0; v < g.vertex_count(); ++v) has_apex |= g.degree(v) == g.vertex_count() - 1;
    if (has_apex && g.vertex_count() > 1) {
      const auto r = reconstruct_from_comparability_graph(g);
      REQUIRE(r.complex);
      REQUIRE(r.complex->facet_count() == 1);
    }
  }
}

TEST_CASE("cycles admit the reversed face order without being simplex skeleta", "[reconstruct]") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<VertexSet> facets;
    for (int i = 1; i <= n; ++i) facets.push_back(VertexSet{i, i % n + 1});
    const auto cycle = SimplicialComplex::from_facets(n, facets);
    const auto report = reconstruct_from_comparability_graph(comparability_graph(cycle));
    REQUIRE(report.status == ReconstructionStatus::ok);
    CHECK(report.both_admissible);
    CHECK(are_isomorphic(*report.complex, cycle));
    CHECK(is_skeleton_of_simplex(cycle) == (n == 3));
  }
}

TEST_CASE("disconnected input is rebuilt per component", "[reconstruct]") {
  const auto c = cx(6, {{1, 2}, {2, 3}, {4, 5}, {6}});
  const auto report = reconstruct_from_comparability_graph(comparability_graph(c));
  REQUIRE(report.status == ReconstructionStatus::ok);
  CHECK(are_isomorphic(*report.complex, c));
  CHECK_FALSE(report.both_admissible);

  const auto with_hexagon = cx(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {6}});
  const auto second = reconstruct_from_comparability_graph(comparability_graph(with_hexagon));
  REQUIRE(second.status == ReconstructionStatus::ok);
  CHECK(are_isomorphic(*second.complex, with_hexagon));
  CHECK(second.both_admissible);
}
