#include <catch2/catch_amalgamated.hpp>

#include "kgraph/degree.hpp"

using namespace kgraph;

TEST_CASE("degree lattice operations") {
  Degree a{2, 0, 1};
  Degree b{1, 3, 1};
  CHECK(join(a, b) == Degree{2, 3, 1});
  CHECK(meet(a, b) == Degree{1, 0, 1});
  CHECK(a + b == Degree{3, 3, 2});
  CHECK(monus(a, b) == Degree{1, 0, 0});
  CHECK(monus(b, a) == Degree{0, 3, 0});
  CHECK((a - meet(a, b)) == Degree{1, 0, 0});
  CHECK_THROWS_AS(a - b, std::invalid_argument);
  CHECK(leq(meet(a, b), a));
  CHECK(leq(a, join(a, b)));
  CHECK(!leq(a, b));
  CHECK(!leq(b, a));
  CHECK(a.total() == 3);
  CHECK(Degree::unit(3, 1) == Degree{0, 1, 0});
  CHECK_THROWS_AS(Degree::unit(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Degree({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(join(Degree{1}, Degree{1, 2}), std::invalid_argument);
}

TEST_CASE("degree box enumeration is lexicographic and complete") {
  auto box = degrees_leq(Degree{1, 2});
  REQUIRE(box.size() == 6);
  CHECK(box.front() == Degree{0, 0});
  CHECK(box[1] == Degree{0, 1});
  CHECK(box[2] == Degree{0, 2});
  CHECK(box[3] == Degree{1, 0});
  CHECK(box.back() == Degree{1, 2});
  CHECK(std::is_sorted(box.begin(), box.end()));

  CHECK(degrees_leq(Degree{0, 0, 0}).size() == 1);
  CHECK(degrees_leq(Degree{3}).size() == 4);
}
