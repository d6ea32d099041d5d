// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/dep_tree.hpp"

#include <algorithm>

#include "crossdep/error.hpp"

namespace crossdep {

struct TreeBuilder {
  static DepTree make(std::vector<int> heads, int root, std::string id) {
    return DepTree(std::move(heads), root, std::move(id));
  }
};

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "accepted";
    case RejectReason::empty: return "empty";
    case RejectReason::multi_root: return "multi-root";
    case RejectReason::cycle: return "cycle";
    case RejectReason::disconnected: return "disconnected";
  }
  return "?";
}

TreeBuildResult build_tree(std::span<const int> heads, std::string source_id) {
  const int n = static_cast<int>(heads.size());
  if (n == 0) return {std::nullopt, RejectReason::empty};

  int root = 0;
  int roots = 0;
  for (int i = 1; i <= n; ++i) {
    const int h = heads[static_cast<std::size_t>(i - 1)];
    if (h < 0 || h > n || h == i)
      throw DomainError("head " + std::to_string(h) + " invalid at position " +
                        std::to_string(i));
    if (h == 0) {
      ++roots;
      root = i;
    }
  }
  if (roots == 0) return {std::nullopt, RejectReason::cycle};
  if (roots > 1) return {std::nullopt, RejectReason::multi_root};

  // 0 = unvisited, 1 = on current walk, 2 = reaches root.
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  state[static_cast<std::size_t>(root)] = 2;
  std::vector<int> walk;
  for (int start = 1; start <= n; ++start) {
    walk.clear();
    int v = start;
    while (state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      walk.push_back(v);
      v = heads[static_cast<std::size_t>(v - 1)];
    }
    if (state[static_cast<std::size_t>(v)] == 1)
      return {std::nullopt, RejectReason::disconnected};
    for (int w : walk) state[static_cast<std::size_t>(w)] = 2;
  }
  return {TreeBuilder::make(std::vector<int>(heads.begin(), heads.end()), root,
                            std::move(source_id)),
          RejectReason::none};
}

TreeBuildResult build_tree(const RawSentence& sentence) {
  std::vector<int> heads;
  heads.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) heads.push_back(t.head);
  return build_tree(heads, sentence.source_id);
}

DepTree make_tree(std::span<const int> heads, std::string source_id) {
  auto built = build_tree(heads, std::move(source_id));
  if (!built.tree)
    throw DomainError(std::string("not a tree: ") +
                      std::string(to_string(built.reason)));
  return std::move(*built.tree);
}

PruneResult prune_and_reattach(const RawSentence& sentence) {
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());
  auto removed = [&](int index) {
    return tokens[static_cast<std::size_t>(index - 1)].token_class != TokenClass::regular;
  };

  PruneResult result;
  result.sentence.source_id = sentence.source_id;
  std::vector<int> new_index(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& t : tokens) {
    switch (t.token_class) {
      case TokenClass::punctuation: ++result.report.removed_punct; break;
      case TokenClass::null_element: ++result.report.removed_null; break;
      case TokenClass::regular:
        result.original_index.push_back(t.index);
        new_index[static_cast<std::size_t>(t.index)] =
            static_cast<int>(result.original_index.size());
        break;
    }
  }

  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  int stamp = 0;
  for (const auto& t : tokens) {
    if (removed(t.index)) continue;
    int h = t.head;
    if (h != 0 && removed(h)) {
      ++result.report.reattached;
      ++stamp;
      while (h != 0 && removed(h)) {
        if (seen[static_cast<std::size_t>(h)] == stamp) {
          result.report.dropped_nontree = true;
          h = 0;
          break;
        }
        seen[static_cast<std::size_t>(h)] = stamp;
        h = tokens[static_cast<std::size_t>(h - 1)].head;
      }
      if (h == t.index) h = 0;  // no ancestor other than itself survives
    }
    RawToken out = t;
    out.index = new_index[static_cast<std::size_t>(t.index)];
    out.head = h == 0 ? 0 : new_index[static_cast<std::size_t>(h)];
    result.sentence.tokens.push_back(std::move(out));
  }
  return result;
}

}  // namespace crossdep
