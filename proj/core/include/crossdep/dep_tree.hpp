// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Punctuation pruning, tree validation and the position-indexed DepTree.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossdep/conll.hpp"

namespace crossdep {

/// A rooted tree whose vertices are the positions 1..n of a sentence.
/// Instances are only produced by build_tree, so every DepTree satisfies:
/// exactly one root, no self-heads, no cycles, all vertices connected.
class DepTree {
 public:
  int size() const { return static_cast<int>(heads_.size()); }

  /// Governor position of the vertex at `position` (1-based); 0 for the root.
  int head(int position) const { return heads_[static_cast<std::size_t>(position - 1)]; }

  /// heads()[i] is the governor of position i + 1.
  std::span<const int> heads() const { return heads_; }

  int root() const { return root_; }
  const std::string& source_id() const { return source_id_; }

  friend bool operator==(const DepTree& a, const DepTree& b) {
    return a.heads_ == b.heads_;
  }

 private:
  friend struct TreeBuilder;
  DepTree(std::vector<int> heads, int root, std::string source_id)
      : heads_(std::move(heads)), root_(root), source_id_(std::move(source_id)) {}

  std::vector<int> heads_;
  int root_ = 0;
  std::string source_id_;
};

enum class RejectReason { none, empty, multi_root, cycle, disconnected };

std::string_view to_string(RejectReason r);

struct TreeBuildResult {
  std::optional<DepTree> tree;
  RejectReason reason = RejectReason::none;

  bool accepted() const { return tree.has_value(); }
};

/// Validates a head array (heads[i] governs position i + 1, 0 = root).
///   no root                          -> cycle
///   two or more roots                -> multi_root
///   one root, some vertex unreachable -> disconnected
TreeBuildResult build_tree(std::span<const int> heads, std::string source_id = {});

TreeBuildResult build_tree(const RawSentence& sentence);

/// Like build_tree but throws DomainError on rejection. For generated
/// structures that are trees by construction.
DepTree make_tree(std::span<const int> heads, std::string source_id = {});

struct PruneReport {
  int removed_punct = 0;
  int removed_null = 0;
  int reattached = 0;
  bool dropped_nontree = false;
};

struct PruneResult {
  RawSentence sentence;  // survivors, re-indexed 1..n
  PruneReport report;
  std::vector<int> original_index;  // original_index[i] is the raw index of survivor i + 1
};

/// Removes punctuation and null tokens. A survivor whose governor was removed
/// is re-headed to its nearest surviving ancestor, or becomes a root (head 0)
/// when the walk reaches the root or comes back to the token itself. A cycle
/// among removed tokens sets dropped_nontree.
PruneResult prune_and_reattach(const RawSentence& sentence);

}  // namespace crossdep
