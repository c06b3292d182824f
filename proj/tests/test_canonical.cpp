#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>

#include "bary/canonical.hpp"
#include "bary/verify.hpp"
#include "build.hpp"
#include "oracles.hpp"

using namespace bary;
using bary::test::cx;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace

TEST_CASE("canonical form examples", "[canonical]") {
  const auto edge = cx(2, {{1, 2}});
  const auto moved = relabel(cx(3, {{2, 3}}), {3, 1, 2});
  CHECK(canonical_form(edge).facet_encoding == canonical_form(moved).facet_encoding);
  CHECK(canonical_form(bary::test::triangle_boundary()) != canonical_form(SimplicialComplex::simplex(3)));

  const auto path = cx(3, {{1, 2}, {2, 3}});
  std::vector<int> perm = identity(3);
  const CanonicalForm expected = canonical_form(path);
  do {
    CHECK(canonical_form(relabel(path, perm)) == expected);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical labeling maps onto the canonical form", "[canonical]") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto c = oracle::random_complex(rng, 7, 6);
    const auto labeling = canonical_labeling(c);
    const auto image = relabel(c, labeling.relabeling);
    CHECK(image.facets() == labeling.form.facet_encoding);
  }
}

TEST_CASE("canonical form is invariant under relabeling", "[canonical]") {
  std::mt19937_64 rng(99);
  const std::vector<SimplicialComplex> subjects{
      bary::test::triangle_boundary(),
      cx(6, {{1, 2, 3}, {3, 4}, {4, 5, 6}, {1, 6}}),
      cx(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}}),
      cx(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}),
      cx(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),
      skeleton(SimplicialComplex::simplex(8), 2),
      cx(10, {{1, 2}, {3}}),
  };
  for (const auto& c : subjects) {
    const CanonicalForm form = canonical_form(c);
    for (int i = 0; i < 200; ++i) {
      REQUIRE(canonical_form(oracle::random_relabeling(rng, c)) == form);
    }
  }
  for (int round = 0; round < 30; ++round) {
    const auto c = oracle::random_complex(rng, 9, 8);
    const CanonicalForm form = canonical_form(c);
    for (int i = 0; i < 200; ++i) REQUIRE(canonical_form(oracle::random_relabeling(rng, c)) == form);
  }
}

TEST_CASE("isomorphism examples", "[canonical]") {
  const auto a = cx(3, {{1, 2}, {2, 3}});
  const auto b = cx(3, {{1, 3}, {2, 3}});
  const auto w = are_isomorphic(a, b);
  REQUIRE(w);
  CHECK(is_isomorphism(*w, a, b));

  const auto self = are_isomorphic(a, a);
  REQUIRE(self);
  CHECK(self->image == identity(3));

  CHECK_FALSE(are_isomorphic(a, cx(3, {{1}, {2}, {3}})));
}

TEST_CASE("isomorphism with unused vertices and degenerate complexes", "[canonical]") {
  const auto small = cx(2, {{1, 2}});
  const auto padded = cx(4, {{2, 4}});
  const auto w = are_isomorphic(small, padded);
  REQUIRE(w);
  CHECK(is_isomorphism(*w, small, padded));
  CHECK(canonical_form(small) != canonical_form(padded));

  CHECK(are_isomorphic(SimplicialComplex::empty_complex(2), SimplicialComplex::empty_complex(2)));
  CHECK(are_isomorphic(SimplicialComplex::void_complex(2), SimplicialComplex::void_complex(2)));
  CHECK_FALSE(are_isomorphic(SimplicialComplex::void_complex(2), SimplicialComplex::empty_complex(2)));
}

TEST_CASE("isomorphism agrees with the permutation oracle", "[canonical][oracle]") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_complexes(n, false);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        const bool expected = oracle::isomorphic_by_permutations(all[i], all[j]);
        const auto w = are_isomorphic(all[i], all[j]);
        REQUIRE(w.has_value() == expected);
        if (w) REQUIRE(is_isomorphism(*w, all[i], all[j]));
        REQUIRE((canonical_form(all[i]) == canonical_form(all[j])) == expected);
      }
    }
  }
  std::mt19937_64 rng(31);
  for (int round = 0; round < 1500; ++round) {
    const auto a = oracle::random_complex(rng, 6, 5);
    const auto b = round % 3 == 0 ? oracle::random_relabeling(rng, a) : oracle::random_complex(rng, 6, 5);
    const bool expected = oracle::isomorphic_by_permutations(a, b);
    const auto w = are_isomorphic(a, b);
    REQUIRE(w.has_value() == expected);
    if (w) REQUIRE(is_isomorphism(*w, a, b));
  }
}

TEST_CASE("isomorphism is an equivalence relation", "[canonical]") {
  const auto all = enumerate_complexes(3, false);
  for (const auto& a : all) {
    CHECK(are_isomorphic(a, a));
    for (const auto& b : all) {
      CHECK(are_isomorphic(a, b).has_value() == are_isomorphic(b, a).has_value());
      for (const auto& c : all) {
        if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
      }
    }
  }
}

TEST_CASE("large symmetric complexes", "[canonical]") {
  std::mt19937_64 rng(8);
  const auto c = skeleton(SimplicialComplex::simplex(20), 1);
  const auto w = are_isomorphic(c, oracle::random_relabeling(rng, c));
  CHECK(w);
  std::vector<VertexSet> facets;
  for (int i = 1; i <= 64; ++i) facets.push_back(VertexSet{i, i % 64 + 1});
  const auto cycle = SimplicialComplex::from_facets(64, facets);
  CHECK(are_isomorphic(cycle, oracle::random_relabeling(rng, cycle)));
  facets.pop_back();
  CHECK_FALSE(are_isomorphic(cycle, SimplicialComplex::from_facets(64, facets)));
}
