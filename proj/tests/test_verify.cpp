#include <catch2/catch_amalgamated.hpp>

#include "bary/canonical.hpp"
#include "bary/verify.hpp"
#include "build.hpp"
#include "oracles.hpp"

using namespace bary;
using bary::test::code_of;
using bary::test::cx;

namespace {

std::size_t classes_by_oracle(const std::vector<SimplicialComplex>& all) {
  std::vector<const SimplicialComplex*> reps;
  for (const auto& c : all) {
    bool seen = false;
    for (const auto* r : reps) seen = seen || oracle::isomorphic_by_permutations(c, *r);
    if (!seen) reps.push_back(&c);
  }
  return reps.size();
}

}  // namespace

TEST_CASE("enumeration counts", "[verify]") {
  CHECK(enumerate_complexes(1, true).size() == 1);
  CHECK(enumerate_complexes(2, true).size() == 2);
  CHECK(enumerate_complexes(3, true).size() == 5);
  for (int n = 1; n <= 4; ++n) {
    CHECK(enumerate_complexes(n, true).size() == classes_by_oracle(enumerate_complexes(n, false)));
  }
  CHECK(code_of([] { enumerate_complexes(7, false); }) == ErrorCode::UniverseTooLarge);
  CHECK(code_of([] { enumerate_complexes(0, false); }) == ErrorCode::EmptyInput);
}

TEST_CASE("enumeration soundness", "[verify]") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_complexes(n, false);
    for (const auto& c : all) {
      REQUIRE(c.ground_size() == n);
      REQUIRE(c.has_all_vertices());
      for (std::size_t i = 0; i < c.facets().size(); ++i)
        for (std::size_t j = 0; j < c.facets().size(); ++j)
          if (i != j) REQUIRE_FALSE(c.facets()[i].is_subset_of(c.facets()[j]));
    }
    for (std::size_t i = 1; i < all.size(); ++i) REQUIRE_FALSE(all[i] == all[i - 1]);
  }
}

TEST_CASE("rigidity verification", "[verify]") {
  for (int n = 2; n <= 4; ++n) {
    const auto report = verify_subdivision_rigidity(n);
    CHECK(report.passed());
    CHECK(report.universe_size == enumerate_complexes(n, true).size());
  }
  CHECK(verify_subdivision_rigidity(4, Universe::up_to).universe_size == 28);
  CHECK(code_of([] { verify_subdivision_rigidity(6); }) == ErrorCode::UniverseTooLarge);
}

TEST_CASE("equivalence rows", "[verify]") {
  const auto edge = cx(3, {{1, 2}, {3}});
  const auto path = cx(3, {{1, 2}, {2, 3}});
  const EquivalenceRow differ = check_equivalence_pair(edge, path);
  for (int i = 1; i <= 8; ++i) {
    if (differ.item[i]) CHECK_FALSE(*differ.item[i]);
  }
  CHECK(differ.consistent());

  const EquivalenceRow same = check_equivalence_pair(path, relabel(path, {2, 3, 1}));
  for (int i = 1; i <= 8; ++i) {
    REQUIRE(same.item[i]);
    CHECK(*same.item[i]);
  }
  CHECK(same.consistent());

  EquivalenceRow broken;
  broken.item[1] = true;
  broken.item[2] = false;
  CHECK_FALSE(broken.consistent());
}

TEST_CASE("equivalence verification", "[verify]") {
  const auto three = verify_equivalences(3);
  CHECK(three.passed());
  CHECK(three.universe_size == 5);
  CHECK_FALSE(three.notes.empty());
  CHECK(verify_equivalences(3, Universe::up_to).passed());
  CHECK(code_of([] { verify_equivalences(5); }) == ErrorCode::UniverseTooLarge);
}
