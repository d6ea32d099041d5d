// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/crossings.hpp"

#include <algorithm>
#include <cassert>

#include "crossdep/error.hpp"

namespace crossdep {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::vector<Edge> edges(const DepTree& tree) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(tree.size()));
  for (int i = 1; i <= tree.size(); ++i) {
    if (tree.head(i) != 0) out.push_back(make_edge(i, tree.head(i)));
  }
  return out;
}

std::int64_t crossing_count(const DepTree& tree) {
  const auto es = edges(tree);
  std::int64_t c = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (edges_cross(es[i], es[j])) ++c;
  return c;
}

std::int64_t dependency_length_sum(const DepTree& tree) {
  std::int64_t d = 0;
  for (const auto& e : edges(tree)) d += e.length();
  return d;
}

std::vector<int> degrees(const DepTree& tree) {
  std::vector<int> k(static_cast<std::size_t>(tree.size()), 0);
  for (const auto& e : edges(tree)) {
    ++k[static_cast<std::size_t>(e.left - 1)];
    ++k[static_cast<std::size_t>(e.right - 1)];
  }
  return k;
}

namespace {

std::int64_t sum_squared_degrees(const DepTree& tree) {
  std::int64_t s = 0;
  for (int k : degrees(tree)) s += static_cast<std::int64_t>(k) * k;
  return s;
}

}  // namespace

Rational degree_second_moment(const DepTree& tree) {
  return Rational(sum_squared_degrees(tree), tree.size());
}

std::int64_t potential_crossing_pairs(const DepTree& tree) {
  const auto es = edges(tree);
  std::int64_t q = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto& a = es[i];
      const auto& b = es[j];
      if (a.left != b.left && a.left != b.right && a.right != b.left &&
          a.right != b.right)
        ++q;
    }
  }
  // 2|Q| = n(n - 1) - n<k^2> holds with equality for trees.
  [[maybe_unused]] const std::int64_t n = tree.size();
  assert(2 * q == n * (n - 1) - sum_squared_degrees(tree));
  return q;
}

Rational crossing_upper_bound(int n) {
  if (n < 2) throw DomainError("crossing_upper_bound requires n >= 2");
  const std::int64_t m = n;
  return Rational(m * (m - 5) + 6, 2);
}

std::pair<std::int64_t, std::int64_t> star_tree_D_range(int n) {
  if (n < 2) throw DomainError("star_tree_D_range requires n >= 2");
  const std::int64_t m = n;
  return {(m * m - m % 2) / 4, m * (m - 1) / 2};
}

SentenceMetrics compute_metrics(const DepTree& tree) {
  SentenceMetrics m;
  m.source_id = tree.source_id();
  m.n = tree.size();
  m.D = dependency_length_sum(tree);
  m.C = crossing_count(tree);
  m.Q = potential_crossing_pairs(tree);
  m.k2 = degree_second_moment(tree);
  return m;
}

}  // namespace crossdep
