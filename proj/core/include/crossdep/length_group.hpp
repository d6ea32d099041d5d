// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crossdep {

/// Paired (D, C) observations of every analyzed sentence of length n, in
/// corpus order.
struct LengthGroup {
  int n = 0;
  std::vector<std::int64_t> d;
  std::vector<std::int64_t> c;

  std::size_t size() const { return d.size(); }
  friend bool operator==(const LengthGroup&, const LengthGroup&) = default;
};

}  // namespace crossdep
