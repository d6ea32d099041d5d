// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/crossings.hpp"
#include "crossdep/error.hpp"
#include "crossdep/generators.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crossdep;

namespace {

std::vector<int> heads_vec(const DepTree& t) { return {t.heads().begin(), t.heads().end()}; }

DepTree reversed(const DepTree& t) {
  std::vector<int> perm(static_cast<std::size_t>(t.size()));
  for (int v = 1; v <= t.size(); ++v) perm[static_cast<std::size_t>(v - 1)] = t.size() + 1 - v;
  return relinearize(t, perm);
}

}  // namespace

TEST_CASE("edges_cross") {
  CHECK(edges_cross({1, 3}, {2, 4}));
  CHECK(edges_cross({2, 4}, {1, 3}));
  CHECK_FALSE(edges_cross({1, 3}, {3, 4}));
  CHECK_FALSE(edges_cross({1, 4}, {2, 3}));
  CHECK_FALSE(edges_cross({1, 2}, {3, 4}));
  CHECK_FALSE(edges_cross({1, 3}, {1, 4}));
}

TEST_CASE("edges_cross matches the arc-drawing oracle on 6 positions") {
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d)
          CHECK(edges_cross({a, b}, {c, d}) == oracle::cross({a, b}, {d, c}));
}

TEST_CASE("crossing_count examples") {
  CHECK(crossing_count(make_tree(std::vector<int>{0, 1, 1})) == 0);
  CHECK(crossing_count(make_tree(std::vector<int>{2, 0})) == 0);
  for (int hub = 1; hub <= 7; ++hub) CHECK(crossing_count(make_star(7, hub)) == 0);

  const auto path = make_tree(std::vector<int>{0, 4, 1, 3});
  CHECK(edges(path) == std::vector<Edge>{{2, 4}, {1, 3}, {3, 4}});
  CHECK(crossing_count(path) == 1);
  CHECK(dependency_length_sum(path) == 5);
  CHECK(potential_crossing_pairs(path) == 1);
}

TEST_CASE("dependency_length_sum examples") {
  CHECK(dependency_length_sum(make_linear(5)) == 4);
  CHECK(dependency_length_sum(make_star(4, 2)) == 4);
}

TEST_CASE("degree_second_moment examples") {
  CHECK(degree_second_moment(make_linear(4)) == Rational(5, 2));
  CHECK(degree_second_moment(make_linear(4)) == Rational(4) - Rational(6, 4));
  CHECK(degree_second_moment(make_star(4, 1)) == Rational(3));
  CHECK(degree_second_moment(make_linear(2)) == Rational(1));
  CHECK(degrees(make_star(4, 3)) == std::vector<int>{1, 1, 3, 1});
}

TEST_CASE("potential_crossing_pairs examples") {
  for (int n = 2; n <= 9; ++n) CHECK(potential_crossing_pairs(make_star(n, 1)) == 0);
  CHECK(potential_crossing_pairs(make_linear(5)) == 3);
  CHECK(Rational(3) == crossing_upper_bound(5));
}

TEST_CASE("crossing_upper_bound") {
  CHECK(crossing_upper_bound(4) == Rational(1));
  CHECK(crossing_upper_bound(5) == Rational(3));
  CHECK(crossing_upper_bound(3) == Rational(0));
  CHECK(crossing_upper_bound(2) == Rational(0));
  CHECK(crossing_upper_bound(6) == Rational(6));
  CHECK_THROWS_AS(crossing_upper_bound(1), DomainError);
}

TEST_CASE("star_tree_D_range against hub enumeration") {
  CHECK(star_tree_D_range(4) == std::pair<std::int64_t, std::int64_t>{4, 6});
  CHECK(star_tree_D_range(5) == std::pair<std::int64_t, std::int64_t>{6, 10});
  CHECK(star_tree_D_range(2) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK_THROWS_AS(star_tree_D_range(1), DomainError);
  for (int n = 2; n <= 15; ++n) {
    std::int64_t lo = INT64_MAX, hi = 0;
    for (int hub = 1; hub <= n; ++hub) {
      std::int64_t d = 0;
      for (int v = 1; v <= n; ++v) d += std::abs(v - hub);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    CHECK(star_tree_D_range(n) == std::pair{lo, hi});
  }
}

TEST_CASE("metrics agree with oracles on random trees and linearizations") {
  Xoshiro256 gen(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(gen.below(30));
    auto tree = shuffle_linearization(make_uniform_random_tree(n, gen), gen);
    const auto h = heads_vec(tree);
    const auto m = compute_metrics(tree);
    CHECK(m.C == oracle::crossings(h));
    CHECK(m.D == oracle::length_sum(h));
    CHECK(m.Q == oracle::independent_pairs(h));
    CHECK(m.D >= n - 1);
    CHECK(m.C <= m.Q);
    // |Q| = (n/2)(n - 1 - <k^2>) holds with equality for trees.
    CHECK(Rational(m.Q) == Rational(n, 2) * (Rational(n - 1) - m.k2));
    CHECK(Rational(m.Q) <= crossing_upper_bound(n));

    // Mirror symmetry.
    const auto mirror = compute_metrics(reversed(tree));
    CHECK(mirror.C == m.C);
    CHECK(mirror.D == m.D);
  }
}

TEST_CASE("linear trees: <k^2> = 4 - 6/n") {
  Xoshiro256 gen(2);
  for (int n = 2; n <= 60; ++n) {
    auto t = shuffle_linearization(make_linear(n), gen);
    CHECK(degree_second_moment(t) == Rational(4) - Rational(6, n));
  }
}
