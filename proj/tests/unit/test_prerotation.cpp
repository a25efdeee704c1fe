#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "rotsys/errors.hpp"
#include "rotsys/prerotation.hpp"
#include "test_util.hpp"

using namespace rotsys;

TEST_CASE("rows are normalized smallest-first") {
  PreRotationSystem pi({{2, 3, 1}, {3, 0, 2}, {1, 3, 0}, {0, 2, 1}});
  CHECK(pi.rotation(0)[0] == 1);
  CHECK(pi.rotation(1)[0] == 0);
  CHECK(pi.at(0, 1) == 2);
  CHECK(pi.position(1, 2) == 1);
}

TEST_CASE("invalid rotations are rejected") {
  CHECK_THROWS_AS(PreRotationSystem({{1, 2}, {0, 2}, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(PreRotationSystem(std::vector<std::vector<Vertex>>{{1}, {0}}), InvalidArgument);
  CHECK_THROWS_AS(PreRotationSystem({{1, 2, 3}, {0, 2}, {0, 1, 3}, {0, 1, 2}}), InvalidArgument);
}

TEST_CASE("restriction") {
  const auto c5 = convex_position_system(5);
  CHECK(restrict_to(c5, std::vector<int>{0, 1, 2, 3, 4}) == c5);
  CHECK(restrict_to(c5, std::vector<int>{0, 1, 2, 3}) == convex_position_system(4));
  CHECK(convex_position_system(4) ==
        PreRotationSystem({{1, 2, 3}, {2, 3, 0}, {3, 0, 1}, {0, 1, 2}}));
  CHECK_THROWS_AS(restrict_to(c5, std::vector<int>{0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(restrict_to(c5, std::vector<int>{0, 1, 7}), InvalidArgument);
}

TEST_CASE("transform") {
  const auto c4 = convex_position_system(4);
  std::vector<int> id{0, 1, 2, 3};
  CHECK(transform(c4, id, false) == c4);
  CHECK(reflect(reflect(c4)) == c4);
  CHECK(canonical_form(reflect(c4)) == canonical_form(c4));
  CHECK_THROWS_AS(transform(c4, std::vector<int>{0, 0, 1, 2}, false), InvalidArgument);
}

TEST_CASE("canonical form is a class invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 4 + trial % 4;
    const auto pi = random_system(n, rng);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const auto image = transform(pi, sigma, trial % 2 == 1);
    REQUIRE(canonical_form(image) == canonical_form(pi));
  }
}

TEST_CASE("canonical form equals the minimum over all relabelings") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pi = random_system(4 + trial % 3, rng);
    const auto all = all_relabelings(pi);
    CHECK(canonical_form(pi) == *std::min_element(all.begin(), all.end()));
  }
}

TEST_CASE("three pre-rotation classes on four elements") {
  std::set<PreRotationSystem> classes;
  for_each_system(4, [&](const PreRotationSystem& pi) { classes.insert(canonical_form(pi)); });
  CHECK(classes.size() == 3);
  CHECK(canonical_form(convex_position_system(4)).natural());
}

TEST_CASE("json lines round trip") {
  const auto c5 = convex_position_system(5);
  const auto line = to_json_line(c5);
  CHECK(line == R"({"n":5,"rotations":[[2,3,4,5],[1,3,4,5],[1,2,4,5],[1,2,3,5],[1,2,3,4]]})");
  CHECK(from_json_line(line) == c5);
  CHECK_THROWS_AS(from_json_line("{"), InvalidArgument);
  CHECK_THROWS_AS(from_json_line(R"({"n":4,"rotations":[[2,3],[1,3],[1,2]]})"), InvalidArgument);
}

TEST_CASE("configuration containment") {
  const auto c6 = convex_position_system(6);
  CHECK(contains_configuration(c6, c6));
  CHECK(contains_configuration(c6, convex_position_system(5)));
}
