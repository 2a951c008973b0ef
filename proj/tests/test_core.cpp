#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "brt/coloring.hpp"
#include "brt/gen.hpp"
#include "brt/oracle.hpp"
#include "brt/partition.hpp"
#include "brt/poset.hpp"
#include "support.hpp"

using namespace brt;
using testsupport::coloring_with_ones;
using testsupport::parity_coloring;

TEST_CASE("homogeneity: singletons and constants") {
  PairColoring f = gen::random_coloring(8, 0.5, 11);
  CHECK(is_homogeneous(f, std::vector<int>{5}, 0));
  CHECK(is_homogeneous(f, std::vector<int>{5}, 1));
  CHECK(is_homogeneous(f, std::vector<int>{}, 0));

  PairColoring zero(4);
  CHECK(is_homogeneous(zero, std::vector<int>{0, 1, 2, 3}, 0));
  CHECK_FALSE(is_homogeneous(zero, std::vector<int>{0, 1, 2, 3}, 1));
}

TEST_CASE("homogeneity: parity coloring") {
  PairColoring f = parity_coloring(6);
  CHECK(is_homogeneous(f, std::vector<int>{0, 2, 4}, 1));
  CHECK_FALSE(is_homogeneous(f, std::vector<int>{0, 1, 2}, 1));
}

TEST_CASE("homogeneity: out-of-universe element is an input error") {
  PairColoring f(4);
  CHECK_THROWS_AS(is_homogeneous(f, std::vector<int>{1, 7}, 0), InputError);
}

TEST_CASE("homogeneity agrees with the double-loop reference on all subsets") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    for (int n = 0; n <= 6; ++n) {
      PairColoring f = gen::random_coloring(n, 0.4, seed * 100 + n);
      for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int x = 0; x < n; ++x)
          if (mask & (uint32_t{1} << x)) s.push_back(x);
        for (int c = 0; c < 2; ++c)
          CHECK(is_homogeneous(f, s, c) == testsupport::ref_homogeneous(f, s, c));
      }
    }
  }
}

TEST_CASE("transitivity: constants and the two-edge example") {
  PairColoring zero(5);
  CHECK(is_transitive(zero, 0));
  CHECK(is_transitive(zero, 1));

  PairColoring f = coloring_with_ones(4, {{0, 1}, {2, 3}});
  CHECK(is_transitive(f, 0));
  CHECK(is_transitive(f, 1));

  PairColoring g = coloring_with_ones(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_transitive(g, 1));
  auto t = find_transitivity_violation(g, 1);
  REQUIRE(t.has_value());
  CHECK(t->x == 0);
  CHECK(t->y == 1);
  CHECK(t->z == 2);
}

TEST_CASE("poset from coloring") {
  SUBCASE("all-zero coloring gives the total order") {
    PosetView p = poset_from_coloring(PairColoring(4), 0);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(p.less(x, y) == (x < y));
  }
  SUBCASE("all-one coloring gives the empty order for color 0") {
    PairColoring f = PairColoring::from_function(3, [](int, int) { return true; });
    PosetView p = poset_from_coloring(f, 0);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK_FALSE(p.less(x, y));
  }
  SUBCASE("parity coloring for color 1 gives two disjoint 3-chains") {
    PosetView p = poset_from_coloring(parity_coloring(6), 1);
    CHECK(p.less(0, 2));
    CHECK(p.less(2, 4));
    CHECK(p.less(0, 4));
    CHECK(p.less(1, 3));
    CHECK_FALSE(p.comparable(0, 1));
    CHECK_FALSE(p.comparable(2, 5));
  }
  SUBCASE("non-transitive input is rejected with a witness triple") {
    PairColoring g = coloring_with_ones(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS(poset_from_coloring(g, 1),
                         doctest::Contains("witness triple (0, 1, 2)"), InputError);
  }
}

TEST_CASE("coloring from poset") {
  SUBCASE("chain") {
    PosetView chain = poset_from_coloring(PairColoring(3), 0);
    PairColoring f = coloring_from_poset(chain);
    CHECK(f == PairColoring(3));
  }
  SUBCASE("empty order") {
    PosetView empty = PosetView::from_relation(3, {});
    PairColoring f = coloring_from_poset(empty);
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) CHECK(f.color(x, y) == 1);
  }
  SUBCASE("two elements below a top") {
    PosetView p = PosetView::from_relation(3, {{0, 2}, {1, 2}});
    PairColoring f = coloring_from_poset(p);
    CHECK(f.color(0, 1) == 1);
    CHECK(f.color(0, 2) == 0);
    CHECK(f.color(1, 2) == 0);
  }
}

TEST_CASE("round trip: poset -> coloring -> poset on transitive-for-0 colorings") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    PosetView p = gen::random_poset(7, 0.3, seed);
    PairColoring f = coloring_from_poset(p);
    REQUIRE(is_transitive(f, 0));
    CHECK(coloring_from_poset(poset_from_coloring(f, 0)) == f);
  }
}

TEST_CASE("pigeonhole coloring") {
  SUBCASE("constant classes give the all-zero coloring") {
    PairColoring f = pigeonhole_coloring(std::vector<int>(5, 0), 1);
    CHECK(f == PairColoring(5));
  }
  SUBCASE("x mod 2 on 6 elements: 1-edges between parities") {
    std::vector<int> g = {0, 1, 0, 1, 0, 1};
    PairColoring f = pigeonhole_coloring(g, 2);
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y) CHECK(f.color(x, y) == (g[x] != g[y] ? 1 : 0));
    CHECK(oracle::max_homogeneous(f, 1).size == 2);
  }
  SUBCASE("all-distinct classes give the all-one coloring") {
    PairColoring f = pigeonhole_coloring({0, 1, 2, 3}, 4);
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) CHECK(f.color(x, y) == 1);
    CHECK(oracle::max_homogeneous(f, 0).size == 1);
  }
}

TEST_CASE("pigeonhole invariants: no (k+1)-set is 1-homogeneous; 0-homogeneous iff constant") {
  for (int k = 1; k <= 3; ++k)
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const int n = 6;
      gen::SplitMix64 rng(seed + 17 * k);
      std::vector<int> classes(n);
      for (int& c : classes) c = rng.below(k);
      PairColoring f = pigeonhole_coloring(classes, k);
      for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int x = 0; x < n; ++x)
          if (mask & (uint32_t{1} << x)) s.push_back(x);
        if (static_cast<int>(s.size()) == k + 1) CHECK_FALSE(is_homogeneous(f, s, 1));
        bool constant = true;
        for (int x : s) constant = constant && classes[x] == classes[s.front()];
        if (s.size() >= 2) CHECK(is_homogeneous(f, s, 0) == constant);
      }
    }
}

TEST_CASE("stability profile") {
  SUBCASE("all-zero coloring") {
    StabilityProfile p = stability_profile(PairColoring(5));
    CHECK(p.flip_count == std::vector<int>(5, 0));
    CHECK(p.limit_zero_set == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("one element turning 1 against every later element") {
    PairColoring f(6);
    for (int y = 2; y < 6; ++y) f.set(0, y, 1);
    StabilityProfile p = stability_profile(f);
    CHECK(p.flip_count[0] == 1);
    CHECK(p.limit_color[0] == 1);
    CHECK(p.limit_zero_set == std::vector<int>{1, 2, 3, 4, 5});
  }
  SUBCASE("empty universe is rejected") {
    CHECK_THROWS_AS(stability_profile(PairColoring(0)), InputError);
  }
}

TEST_CASE("partition validation") {
  SUBCASE("singleton classes are always valid") {
    PairColoring f = gen::random_coloring(5, 0.5, 3);
    ColorPartition g{5, 5, std::nullopt, {0, 1, 2, 3, 4}};
    CHECK(validate_partition(f, g, PartitionMode::ZeroHomogeneous).valid());
  }
  SUBCASE("a constant partition over a 1-edge reports that edge") {
    PairColoring f = coloring_with_ones(3, {{1, 2}});
    ColorPartition g{3, 1, std::nullopt, {0, 0, 0}};
    auto report = validate_partition(f, g, PartitionMode::ZeroHomogeneous);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].cls == 0);
    CHECK(report.violations[0].x == 1);
    CHECK(report.violations[0].y == 2);
  }
  SUBCASE("chain and antichain modes") {
    PosetView p = PosetView::from_relation(3, {{0, 2}, {1, 2}});
    ColorPartition chains{3, 2, std::nullopt, {0, 1, 0}};  // {0,2} and {1}
    CHECK(validate_partition(p, chains, PartitionMode::Chain).valid());
    CHECK_FALSE(validate_partition(p, chains, PartitionMode::Antichain).valid());
    ColorPartition antichains{3, 2, std::nullopt, {0, 0, 1}};  // {0,1} and {2}
    CHECK(validate_partition(p, antichains, PartitionMode::Antichain).valid());
  }
  SUBCASE("universe mismatch is an input error") {
    PairColoring f(4);
    ColorPartition g{3, 1, std::nullopt, {0, 0, 0}};
    CHECK_THROWS_AS(validate_partition(f, g, PartitionMode::ZeroHomogeneous), InputError);
  }
  SUBCASE("mode/subject mismatch is an input error") {
    PairColoring f(3);
    ColorPartition g{3, 1, std::nullopt, {0, 0, 0}};
    CHECK_THROWS_AS(validate_partition(f, g, PartitionMode::Chain), InputError);
  }
}

TEST_CASE("coloring storage rejects bad pairs and bad colors") {
  PairColoring f(3);
  CHECK_THROWS_AS(f.color(0, 0), InputError);
  CHECK_THROWS_AS(f.set(0, 3, 1), InputError);
  CHECK_THROWS_AS(f.set(0, 1, 2), InputError);
  CHECK(f.color(2, 1) == f.color(1, 2));  // symmetric access
}
