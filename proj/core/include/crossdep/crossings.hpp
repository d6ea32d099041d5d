// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Per-sentence quantities of crossing theory: D, C, |Q|, <k^2> and bounds.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crossdep/dep_tree.hpp"

namespace crossdep {

using Rational = boost::rational<std::int64_t>;

/// An undirected dependency between two positions, normalized left < right.
struct Edge {
  int left = 0;
  int right = 0;

  int length() const { return right - left; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Builds the normalized edge of a head/dependent pair.
Edge make_edge(int a, int b);

/// The n - 1 edges of `tree`, ordered by dependent position.
std::vector<Edge> edges(const DepTree& tree);

/// Strict interleaving; edges sharing a vertex never cross.
constexpr bool edges_cross(const Edge& a, const Edge& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

/// Number of crossing edge pairs, by exhaustive pair scan.
std::int64_t crossing_count(const DepTree& tree);

/// Sum of dependency lengths.
std::int64_t dependency_length_sum(const DepTree& tree);

/// Undirected vertex degrees, indexed by position - 1.
std::vector<int> degrees(const DepTree& tree);

/// (1/n) * sum of squared degrees, exact.
Rational degree_second_moment(const DepTree& tree);

/// Number of edge pairs that share no vertex. For a tree this equals
/// (n/2)(n - 1 - <k^2>), which is asserted in debug builds.
std::int64_t potential_crossing_pairs(const DepTree& tree);

/// (n/2)(n - 5) + 3, the largest |Q| over trees of n vertices. n >= 2.
Rational crossing_upper_bound(int n);

/// Closed range of D over all linear arrangements of a star tree of n
/// vertices: [(n^2 - n mod 2)/4, n(n - 1)/2]. n >= 2.
std::pair<std::int64_t, std::int64_t> star_tree_D_range(int n);

struct SentenceMetrics {
  std::string source_id;
  int n = 0;
  std::int64_t D = 0;
  std::int64_t C = 0;
  std::int64_t Q = 0;
  Rational k2{0};

  friend bool operator==(const SentenceMetrics&, const SentenceMetrics&) = default;
};

SentenceMetrics compute_metrics(const DepTree& tree);

}  // namespace crossdep
