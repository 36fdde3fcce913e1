#include "orbitcat/para_suite.hpp"

#include <algorithm>

#include "doctest.h"

using namespace orbitcat::para;

TEST_CASE("serial and parallel suites agree exactly") {
  for (int rank = 0; rank <= 3; ++rank)
    for (int window = 0; window <= 2; ++window) {
      const DualitySuiteConfig config{rank, window, 8};
      CHECK(run_duality_suite_serial(config) == run_duality_suite_parallel(config));
    }
}

TEST_CASE("suite counts morphisms and composable pairs") {
  const DualitySuiteConfig config{2, 1, 16};
  const auto result = run_duality_suite_parallel(config);
  std::size_t morphisms = 0;
  std::size_t pairs = 0;
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      morphisms += enumerate(n, m, 1).size();
      for (int k = 0; k <= 2; ++k) pairs += enumerate(n, m, 1).size() * enumerate(m, k, 1).size();
    }
  CHECK(result.morphisms == morphisms);
  CHECK(result.composable_pairs == pairs);
  CHECK(result.clean());
  CHECK(result.witnesses.empty());
}

TEST_CASE("delta escapes are sorted and genuine") {
  const auto result = run_duality_suite_parallel({2, 2, 16});
  REQUIRE_FALSE(result.delta_escapes.empty());
  CHECK(std::is_sorted(result.delta_escapes.begin(), result.delta_escapes.end()));
  for (const auto& f : result.delta_escapes) {
    CHECK(in_Delta(f));
    CHECK_FALSE(in_Delta(cyclic_dual(f)));
  }
  const ParaMorphism witness(0, 1, {1});
  CHECK(std::binary_search(result.delta_escapes.begin(), result.delta_escapes.end(), witness));
}

TEST_CASE("empty configuration") {
  const auto result = run_duality_suite_serial({-1, 2, 16});
  CHECK(result.morphisms == 0);
  CHECK(result.clean());
}
