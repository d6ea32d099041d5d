// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Synthetic trees and linearizations for tests, calibration and simulation.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "crossdep/dep_tree.hpp"
#include "crossdep/random.hpp"

namespace crossdep {

enum class TreeKind { star, linear, uniform_random };

std::string_view to_string(TreeKind k);
std::optional<TreeKind> parse_tree_kind(std::string_view s);

struct TreeSpec {
  TreeKind kind = TreeKind::uniform_random;
  int n = 2;
  std::optional<int> hub_position;       // star only; default 1
  std::optional<std::vector<int>> order;  // linear only; default identity

  void validate() const;
};

/// Star with every non-hub vertex headed by the hub.
DepTree make_star(int n, int hub_position);

/// Path visiting `vertex_order` (a permutation of 1..n) in sequence, rooted
/// at vertex_order[0].
DepTree make_linear(std::span<const int> vertex_order);

/// Identity-order path of n vertices.
DepTree make_linear(int n);

/// Tree decoded from a Pruefer sequence over labels 1..n (length n - 2),
/// rooted at `root`. Vertex labels are positions.
DepTree decode_pruefer(std::span<const int> sequence, int root);

/// Uniform over the n^(n-2) labeled trees, with a uniform root.
DepTree make_uniform_random_tree(int n, Xoshiro256& gen);

/// Moves vertex v to position permutation[v - 1]; topology is unchanged.
DepTree relinearize(const DepTree& tree, std::span<const int> permutation);

/// relinearize with a uniformly random permutation.
DepTree shuffle_linearization(const DepTree& tree, Xoshiro256& gen);

/// Builds one tree from a spec; `gen` is used only by uniform_random.
DepTree generate(const TreeSpec& spec, Xoshiro256& gen);

}  // namespace crossdep
