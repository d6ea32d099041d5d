// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Kendall tau (tau-a), the Monte Carlo permutation test on the proportion of
// non-negative taus across length groups, and a one-sided Fisher
// randomization test on subset means.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "crossdep/crossings.hpp"
#include "crossdep/error.hpp"
#include "crossdep/length_group.hpp"
#include "crossdep/random.hpp"

namespace crossdep {

/// tau = (n_c - n_d) / n_0 with n_0 = m(m - 1)/2. Tied pairs count as
/// neither concordant nor discordant and stay in the denominator.
struct TauResult {
  std::int64_t n_c = 0;
  std::int64_t n_d = 0;
  std::int64_t n_0 = 0;

  Rational tau() const { return Rational(n_c - n_d, n_0); }
  double value() const { return static_cast<double>(n_c - n_d) / static_cast<double>(n_0); }
  int sign() const { return (n_c > n_d) - (n_c < n_d); }

  friend bool operator==(const TauResult&, const TauResult&) = default;
};

/// Reusable scratch space for repeated tau evaluations.
class KendallWorkspace {
 public:
  /// Sequences up to this length use the direct pair scan.
  static constexpr std::size_t kDirectLimit = 12;

  template <class X, class Y>
  TauResult compute(std::span<const X> x, std::span<const Y> y);

  /// O(m^2) pair scan.
  template <class X, class Y>
  TauResult direct(std::span<const X> x, std::span<const Y> y);

  /// Knight's O(m log m) merge-sort count.
  template <class X, class Y>
  TauResult knight(std::span<const X> x, std::span<const Y> y);

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> buffer_;
};

/// Kendall tau-a of two equal-length sequences. m >= 2.
template <class X, class Y>
TauResult kendall_tau(std::span<const X> x, std::span<const Y> y) {
  KendallWorkspace ws;
  return ws.compute(x, y);
}

inline TauResult kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
  return kendall_tau(std::span<const double>(x), std::span<const double>(y));
}

inline TauResult kendall_tau(const std::vector<std::int64_t>& x,
                             const std::vector<std::int64_t>& y) {
  return kendall_tau(std::span<const std::int64_t>(x), std::span<const std::int64_t>(y));
}

struct MonteCarloResult {
  std::int64_t groups = 0;
  std::int64_t tau_nonneg = 0;  // observed groups with tau >= 0
  std::int64_t tau_zero = 0;
  std::int64_t tau_pos = 0;
  std::int64_t replicas = 0;
  std::int64_t exceed = 0;  // replicas with p_c(tau >= 0) >= observed

  double p_tau_nonneg() const { return ratio(tau_nonneg, groups); }
  double p_tau_zero() const { return ratio(tau_zero, groups); }
  double p_tau_pos() const { return ratio(tau_pos, groups); }
  double p_value() const { return ratio(exceed, replicas); }

 private:
  static double ratio(std::int64_t a, std::int64_t b) {
    return static_cast<double>(a) / static_cast<double>(b);
  }
};

/// Monte Carlo test for the significance of p(tau >= 0). In each of
/// `replicas` randomizations every group's D vector is replaced by a uniform
/// random permutation (C fixed); the p-value is the fraction of replicas
/// whose proportion of non-negative taus is >= the observed one. Group g in
/// replica r draws from rng.substream(g, r), so `jobs` does not change the
/// result.
MonteCarloResult monte_carlo_p_tau(std::span<const LengthGroup> groups,
                                   std::int64_t replicas, const RandomSource& rng,
                                   unsigned jobs = 1);

struct FisherResult {
  double observed_mean = 0;
  std::int64_t replicas = 0;
  std::int64_t at_or_below = 0;
  std::int64_t at_or_above = 0;

  double left_p() const { return static_cast<double>(at_or_below) / static_cast<double>(replicas); }
  double right_p() const { return static_cast<double>(at_or_above) / static_cast<double>(replicas); }
};

/// One-sided Fisher randomization tests on the mean of `values` over
/// `subset`. Each replica draws a uniform random subset of the same size
/// (replica r uses rng.substream(r)); left counts replica means <= the
/// observed mean, right counts means >= it. Means that agree to 1e-9
/// relative are treated as equal.
FisherResult fisher_randomization_mean(std::span<const double> values,
                                       std::span<const std::size_t> subset,
                                       std::int64_t replicas, const RandomSource& rng,
                                       unsigned jobs = 1);

// ---------------------------------------------------------------------------

template <class X, class Y>
TauResult KendallWorkspace::compute(std::span<const X> x, std::span<const Y> y) {
  if (x.size() != y.size()) throw DomainError("kendall_tau: sequences differ in length");
  if (x.size() < 2) throw DomainError("kendall_tau: needs at least two observations");
  return x.size() <= kDirectLimit ? direct(x, y) : knight(x, y);
}

template <class X, class Y>
TauResult KendallWorkspace::direct(std::span<const X> x, std::span<const Y> y) {
  TauResult r;
  const std::size_t m = x.size();
  r.n_0 = static_cast<std::int64_t>(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int sx = (x[i] < x[j]) - (x[j] < x[i]);
      const int sy = (y[i] < y[j]) - (y[j] < y[i]);
      const int p = sx * sy;
      r.n_c += p > 0;
      r.n_d += p < 0;
    }
  }
  return r;
}

// Knight's algorithm: sort by (x, y), then count strict inversions of y with
// a merge sort. Ties are accounted for through run lengths.
template <class X, class Y>
TauResult KendallWorkspace::knight(std::span<const X> x, std::span<const Y> y) {
  const std::size_t m = x.size();
  auto pairs = [](std::int64_t t) { return t * (t - 1) / 2; };

  order_.resize(m);
  buffer_.resize(m);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] < x[b]) return true;
    if (x[b] < x[a]) return false;
    return y[a] < y[b];
  });

  std::int64_t tied_x = 0;
  std::int64_t tied_xy = 0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i + 1;
    while (j < m && !(x[order_[i]] < x[order_[j]])) ++j;
    tied_x += pairs(static_cast<std::int64_t>(j - i));
    for (std::size_t k = i; k < j;) {
      std::size_t l = k + 1;
      while (l < j && !(y[order_[k]] < y[order_[l]])) ++l;
      tied_xy += pairs(static_cast<std::int64_t>(l - k));
      k = l;
    }
    i = j;
  }

  // Bottom-up merge sort on y; an element taken from the right run jumps
  // over every remaining element of the left run, all strictly greater.
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < m; width *= 2) {
    for (std::size_t lo = 0; lo < m; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, m);
      const std::size_t hi = std::min(lo + 2 * width, m);
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (y[order_[b]] < y[order_[a]]) {
          swaps += static_cast<std::int64_t>(mid - a);
          buffer_[out++] = order_[b++];
        } else {
          buffer_[out++] = order_[a++];
        }
      }
      while (a < mid) buffer_[out++] = order_[a++];
      while (b < hi) buffer_[out++] = order_[b++];
    }
    order_.swap(buffer_);
  }

  std::int64_t tied_y = 0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i + 1;
    while (j < m && !(y[order_[i]] < y[order_[j]])) ++j;
    tied_y += pairs(static_cast<std::int64_t>(j - i));
    i = j;
  }

  TauResult r;
  r.n_0 = pairs(static_cast<std::int64_t>(m));
  r.n_d = swaps;
  r.n_c = r.n_0 - tied_x - tied_y + tied_xy - swaps;
  return r;
}

}  // namespace crossdep
