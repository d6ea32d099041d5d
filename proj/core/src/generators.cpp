// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "crossdep/error.hpp"

namespace crossdep {
namespace {

void require_size(int n) {
  if (n < 2) throw DomainError("tree size must be >= 2, got " + std::to_string(n));
}

bool is_permutation_of_1_to_n(std::span<const int> p) {
  std::vector<char> seen(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

// Orients an undirected tree (adjacency lists over 1..n) away from `root`.
std::vector<int> orient(const std::vector<std::vector<int>>& adj, int root) {
  const int n = static_cast<int>(adj.size()) - 1;
  std::vector<int> heads(static_cast<std::size_t>(n), -1);
  heads[static_cast<std::size_t>(root - 1)] = 0;
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (heads[static_cast<std::size_t>(w - 1)] != -1) continue;
      heads[static_cast<std::size_t>(w - 1)] = v;
      queue.push(w);
    }
  }
  return heads;
}

}  // namespace

std::string_view to_string(TreeKind k) {
  switch (k) {
    case TreeKind::star: return "star";
    case TreeKind::linear: return "linear";
    case TreeKind::uniform_random: return "uniform-random";
  }
  return "?";
}

std::optional<TreeKind> parse_tree_kind(std::string_view s) {
  if (s == "star") return TreeKind::star;
  if (s == "linear") return TreeKind::linear;
  if (s == "uniform-random") return TreeKind::uniform_random;
  return std::nullopt;
}

void TreeSpec::validate() const {
  require_size(n);
  if (hub_position && (*hub_position < 1 || *hub_position > n))
    throw DomainError("hub position must lie in [1, n]");
  if (order && (static_cast<int>(order->size()) != n || !is_permutation_of_1_to_n(*order)))
    throw DomainError("vertex order must be a permutation of 1..n");
}

DepTree make_star(int n, int hub_position) {
  require_size(n);
  if (hub_position < 1 || hub_position > n)
    throw DomainError("hub position " + std::to_string(hub_position) + " outside [1, " +
                      std::to_string(n) + "]");
  std::vector<int> heads(static_cast<std::size_t>(n), hub_position);
  heads[static_cast<std::size_t>(hub_position - 1)] = 0;
  return make_tree(heads);
}

DepTree make_linear(std::span<const int> vertex_order) {
  const int n = static_cast<int>(vertex_order.size());
  require_size(n);
  if (!is_permutation_of_1_to_n(vertex_order))
    throw DomainError("vertex order must be a permutation of 1..n");
  std::vector<int> heads(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i)
    heads[static_cast<std::size_t>(vertex_order[static_cast<std::size_t>(i)] - 1)] =
        vertex_order[static_cast<std::size_t>(i - 1)];
  return make_tree(heads);
}

DepTree make_linear(int n) {
  require_size(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return make_linear(order);
}

DepTree decode_pruefer(std::span<const int> sequence, int root) {
  const int n = static_cast<int>(sequence.size()) + 2;
  if (root < 1 || root > n) throw DomainError("root outside [1, n]");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int v : sequence) {
    if (v < 1 || v > n) throw DomainError("Pruefer label outside [1, n]");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  // Linear-time decoding: `leaf` scans upward for the smallest leaf, except
  // when removing an edge creates a smaller leaf, which is used immediately.
  int ptr = 1;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int v : sequence) {
    link(leaf, v);
    if (--degree[static_cast<std::size_t>(v)] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  link(leaf, n);
  return make_tree(orient(adj, root));
}

DepTree make_uniform_random_tree(int n, Xoshiro256& gen) {
  require_size(n);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& v : seq) v = 1 + static_cast<int>(gen.below(static_cast<std::uint64_t>(n)));
  const int root = 1 + static_cast<int>(gen.below(static_cast<std::uint64_t>(n)));
  return decode_pruefer(seq, root);
}

DepTree relinearize(const DepTree& tree, std::span<const int> permutation) {
  const int n = tree.size();
  if (static_cast<int>(permutation.size()) != n || !is_permutation_of_1_to_n(permutation))
    throw DomainError("relinearize: not a permutation of 1..n");
  std::vector<int> heads(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    const int h = tree.head(v);
    heads[static_cast<std::size_t>(permutation[static_cast<std::size_t>(v - 1)] - 1)] =
        h == 0 ? 0 : permutation[static_cast<std::size_t>(h - 1)];
  }
  return make_tree(heads, tree.source_id());
}

DepTree shuffle_linearization(const DepTree& tree, Xoshiro256& gen) {
  std::vector<int> perm(static_cast<std::size_t>(tree.size()));
  std::iota(perm.begin(), perm.end(), 1);
  gen.shuffle(std::span<int>(perm));
  return relinearize(tree, perm);
}

DepTree generate(const TreeSpec& spec, Xoshiro256& gen) {
  spec.validate();
  switch (spec.kind) {
    case TreeKind::star: return make_star(spec.n, spec.hub_position.value_or(1));
    case TreeKind::linear:
      return spec.order ? make_linear(*spec.order) : make_linear(spec.n);
    case TreeKind::uniform_random: return make_uniform_random_tree(spec.n, gen);
  }
  throw DomainError("unknown tree kind");
}

}  // namespace crossdep
