#include "orbitcat/para_cat.hpp"

#include <limits>
#include <set>

#include "doctest.h"

using namespace orbitcat::para;

namespace {

// Dual by an unbounded-looking scan of the defining formula over a range
// wide enough for every morphism used below.
std::vector<Value> dual_by_definition(const ParaMorphism& f) {
  std::vector<Value> out;
  for (Value i = 0; i <= f.target_rank(); ++i) {
    Value best = std::numeric_limits<Value>::min();
    for (Value j = -200; j <= 200; ++j)
      if (-f(-j) <= i) best = std::max(best, j);
    out.push_back(best);
  }
  return out;
}

bool valid_window(int n, int m, const std::vector<Value>& v) {
  for (int j = 0; j < n; ++j)
    if (v[j] > v[j + 1]) return false;
  return v[n] <= v[0] + m + 1;
}

// Counts windows by trying every tuple in a box that contains all of them.
std::size_t count_by_box(int n, int m, int window) {
  const Value lo = -static_cast<Value>(window) * (m + 1);
  const Value hi = static_cast<Value>(window) * (m + 1) + m + 1;
  std::size_t count = 0;
  std::vector<Value> v(static_cast<std::size_t>(n) + 1, lo);
  while (true) {
    if (v[0] <= -lo && valid_window(n, m, v)) ++count;
    int k = n;
    while (k >= 0 && v[k] == hi) v[k--] = lo;
    if (k < 0) break;
    ++v[k];
  }
  return count;
}

}  // namespace

TEST_CASE("constructor rejects malformed windows") {
  CHECK_THROWS_AS(ParaMorphism(1, 1, {0}), InvalidMorphism);
  CHECK_THROWS_AS(ParaMorphism(1, 1, {1, 0}), InvalidMorphism);
  CHECK_THROWS_AS(ParaMorphism(1, 1, {0, 3}), InvalidMorphism);
  CHECK_THROWS_AS(ParaMorphism(-1, 1, {}), InvalidMorphism);
  CHECK_NOTHROW(ParaMorphism(1, 1, {0, 2}));
  CHECK_NOTHROW(ParaMorphism(0, 0, {-7}));
}

TEST_CASE("periodic evaluation") {
  const ParaMorphism f(1, 2, {0, 2});
  CHECK(f(0) == 0);
  CHECK(f(1) == 2);
  CHECK(f(2) == 3);
  CHECK(f(3) == 5);
  CHECK(f(-1) == -1);
  CHECK(f(-2) == -3);
  CHECK(eval(f, 5) == 8);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 2; ++k)
        for (const auto& f : enumerate(n, m, 1))
          for (const auto& g : enumerate(m, k, 1)) {
            const auto gf = compose(g, f);
            for (Value j = -10; j <= 10; ++j) REQUIRE(gf(j) == g(f(j)));
          }
}

TEST_CASE("composition errors and identities") {
  CHECK_THROWS_AS(compose(identity(2), identity(1)), RankMismatch);
  const ParaMorphism f(2, 1, {0, 1, 2});
  CHECK(compose(identity(1), f) == f);
  CHECK(compose(f, identity(2)) == f);
}

TEST_CASE("cyclic dual matches the defining maximum") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : enumerate(n, m, 2)) REQUIRE(cyclic_dual(f).values() == dual_by_definition(f));
}

TEST_CASE("dual of the cyclic operator on [2] is itself") {
  const auto t = parse_literal("2 2 : 1 2 3");
  CHECK(t == cycle(2));
  CHECK(cyclic_dual(t) == t);
}

TEST_CASE("dual swaps ranks and fixes identities") {
  const ParaMorphism f(2, 4, {0, 1, 3});
  const auto d = cyclic_dual(f);
  CHECK(d.source_rank() == 4);
  CHECK(d.target_rank() == 2);
  for (int n = 0; n <= 5; ++n) CHECK(cyclic_dual(identity(n)) == identity(n));
}

TEST_CASE("the morphism 0 -> 1 hitting 1 is in Delta and its dual is not") {
  const ParaMorphism f(0, 1, {1});
  CHECK(in_Delta(f));
  const auto d = cyclic_dual(f);
  CHECK(d.values() == dual_by_definition(f));
  CHECK(in_K(d));
  CHECK_FALSE(in_Delta(d));
}

TEST_CASE("K and Delta membership") {
  CHECK(in_K(ParaMorphism(1, 1, {0, 2})));
  CHECK_FALSE(in_Delta(ParaMorphism(1, 1, {0, 2})));
  CHECK_FALSE(in_K(ParaMorphism(1, 1, {-1, 0})));
  CHECK(in_Delta(ParaMorphism(1, 1, {0, 1})));
}

TEST_CASE("faces and degeneracies satisfy the cosimplicial identities") {
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(face(n, j), face(n - 1, i)) == compose(face(n, i), face(n - 1, j - 1)));
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(degeneracy(n, j), degeneracy(n + 1, i)) ==
              compose(degeneracy(n, i), degeneracy(n + 1, j + 1)));
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      CHECK(compose(degeneracy(n, i), face(n + 1, i)) == identity(n));
      CHECK(compose(degeneracy(n, i), face(n + 1, i + 1)) == identity(n));
    }
}

TEST_CASE("faces and degeneracies lie in Delta") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) CHECK(in_Delta(face(n, i)));
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) CHECK(in_Delta(degeneracy(n, i)));
}

TEST_CASE("face and degeneracy index errors") {
  CHECK_THROWS_AS(face(0, 0), IndexOutOfRange);
  CHECK_THROWS_AS(face(2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(face(2, -1), IndexOutOfRange);
  CHECK_THROWS_AS(degeneracy(1, 2), IndexOutOfRange);
  CHECK_THROWS_AS(cycle(-1), IndexOutOfRange);
}

TEST_CASE("cycle is invertible with its (n+1)-st power a translation") {
  for (int n = 0; n <= 4; ++n) {
    auto power = identity(n);
    for (int k = 0; k <= n; ++k) power = compose(cycle(n), power);
    for (Value j = 0; j <= n; ++j) CHECK(power(j) == j + n + 1);
    CHECK(lambda_canonical(power) == identity(n));
  }
}

TEST_CASE("enumerate matches a brute-force box count") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int w = 0; w <= 2; ++w) CHECK(enumerate(n, m, w).size() == count_by_box(n, m, w));
}

TEST_CASE("enumerate is sorted, duplicate-free and respects the window") {
  const auto all = enumerate(2, 1, 2);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<ParaMorphism>(all.begin(), all.end()).size() == all.size());
  for (const auto& f : all) {
    CHECK(f.values().front() >= -4);
    CHECK(f.values().front() <= 4);
  }
  CHECK(enumerate(-1, 1, 1).empty());
}

TEST_CASE("Delta morphisms 1 -> 1 number three") {
  auto count = [](int window) {
    std::size_t c = 0;
    for (const auto& f : enumerate(1, 1, window)) c += in_Delta(f);
    return c;
  };
  CHECK(count(1) == 3);
  CHECK(count(2) == 3);
  // With window 0 only f(0) = 0 is enumerated, missing [1, 1].
  CHECK(count(0) == 2);
}

TEST_CASE("lambda canonical form") {
  const ParaMorphism f(1, 1, {5, 6});
  const auto c = lambda_canonical(f);
  CHECK(c.values() == std::vector<Value>{1, 2});
  CHECK(lambda_canonical(c) == c);
  CHECK(lambda_canonical(ParaMorphism(1, 2, {-1, 0})).values() == std::vector<Value>{2, 3});
  std::set<ParaMorphism> images;
  for (const auto& g : enumerate(0, 0, 2)) images.insert(lambda_canonical(g));
  CHECK(images.size() == 1);
  images.clear();
  for (const auto& g : enumerate(1, 1, 2)) images.insert(lambda_canonical(g));
  CHECK(images.size() == 6);
}

TEST_CASE("literal round trip") {
  for (const auto& f : enumerate(2, 2, 1)) CHECK(parse_literal(to_literal(f)) == f);
  CHECK(to_literal(ParaMorphism(1, 2, {-3, 0})) == "1 2 : -3 0");
  CHECK(parse_literal("  1   2 :\t-3 0 ") == ParaMorphism(1, 2, {-3, 0}));
}

TEST_CASE("literal parse errors") {
  CHECK_THROWS_AS(parse_literal(""), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("1 1 0 1"), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("1 1 : 0"), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("1 1 : 0 1 2"), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("1 x : 0 1"), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("-1 1 : 0"), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("1 1 : 0 1x"), LiteralParseError);
  CHECK_THROWS_AS(parse_literal("1 1 : 1 0"), InvalidMorphism);
}
