// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Per-treebank analysis: corpus loading, grouping by sentence length,
// summaries (M, p(tau = 0), p(tau > 0), Monte Carlo p-value, p0) and the
// meta-analysis of the non-rejected treebanks.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossdep/conll.hpp"
#include "crossdep/crossings.hpp"
#include "crossdep/dep_tree.hpp"
#include "crossdep/length_group.hpp"
#include "crossdep/random.hpp"
#include "crossdep/stat_tests.hpp"

namespace crossdep {

inline constexpr std::int64_t kDefaultReplicas = 10'000;
inline constexpr std::int64_t kDefaultMetaReplicas = 1'000'000;
inline constexpr double kDefaultAlpha = 0.05;
inline constexpr int kMinAnalyzedLength = 4;

// --- corpus loading --------------------------------------------------------

struct SentenceTrace {
  std::string source_id;
  int n = 0;  // after pruning
  PruneReport prune;
  RejectReason outcome = RejectReason::none;
};

struct ValidationReport {
  std::string name;
  std::size_t blocks = 0;
  std::size_t skipped_malformed = 0;
  std::size_t parsed = 0;
  std::size_t accepted = 0;
  std::map<RejectReason, std::size_t> rejected;
  std::int64_t removed_punct = 0;
  std::int64_t removed_null = 0;
  std::int64_t reattached = 0;
  std::vector<std::string> warnings;

  std::size_t rejected_total() const;
};

struct CorpusMetrics {
  ValidationReport report;
  std::vector<SentenceMetrics> metrics;  // accepted sentences, corpus order
  std::vector<SentenceTrace> trace;      // every parsed sentence
};

/// Prunes, validates and measures every parsed sentence.
CorpusMetrics measure_corpus(const ParseResult& parsed, std::string name);

/// parse_conll_file followed by measure_corpus. Throws IoError.
CorpusMetrics load_corpus(const std::string& path, const IngestConfig& config,
                          std::string name);

// --- grouping --------------------------------------------------------------

struct LengthExclusions {
  std::vector<int> too_short;   // n < 4: C = 0 necessarily
  std::vector<int> too_sparse;  // fewer than two sentences: tau undefined
  std::size_t distinct_lengths = 0;

  std::size_t count() const { return too_short.size() + too_sparse.size(); }
};

struct Grouping {
  std::vector<LengthGroup> groups;  // ascending n
  LengthExclusions excluded;
};

Grouping group_by_length(std::span<const SentenceMetrics> metrics);

// --- per-treebank summary --------------------------------------------------

/// Which sentences S and mean_n are computed over.
enum class SentenceUniverse { accepted, analyzed };

std::string_view to_string(SentenceUniverse u);

struct SummaryOptions {
  std::int64_t replicas = kDefaultReplicas;
  SentenceUniverse universe = SentenceUniverse::accepted;
  unsigned jobs = 1;
};

/// One treebank's results. Stored as counts so it round-trips exactly;
/// proportions are derived and undefined (nullopt) when M = 0.
struct TreebankSummary {
  std::string name;
  std::int64_t M = 0;
  std::int64_t tau_zero = 0;
  std::int64_t tau_pos = 0;
  std::int64_t tau_neg = 0;
  std::int64_t all_planar = 0;  // analyzed lengths where every C = 0
  std::int64_t replicas = 0;
  std::int64_t exceed = 0;
  std::int64_t S = 0;
  std::int64_t length_sum = 0;  // sum of n over the S sentences
  std::int64_t excluded_lengths = 0;
  SentenceUniverse universe = SentenceUniverse::accepted;

  bool tested() const { return M > 0; }
  std::optional<double> p_tau_zero() const;
  std::optional<double> p_tau_pos() const;
  std::optional<double> p_tau_nonneg() const;
  std::optional<double> p_value() const;
  std::optional<double> p0() const;
  std::optional<double> mean_n() const;

  friend bool operator==(const TreebankSummary&, const TreebankSummary&) = default;
};

TreebankSummary treebank_summary(std::string name, const Grouping& grouping,
                                 std::span<const SentenceMetrics> metrics,
                                 const SummaryOptions& options, const RandomSource& rng);

/// Convenience: group_by_length + treebank_summary.
TreebankSummary summarize(std::string name, std::span<const SentenceMetrics> metrics,
                          const SummaryOptions& options, const RandomSource& rng);

// --- meta-analysis ---------------------------------------------------------

enum class MetaFeature { p0, S, M, mean_n };
inline constexpr std::array<MetaFeature, 4> kMetaFeatures = {
    MetaFeature::p0, MetaFeature::S, MetaFeature::M, MetaFeature::mean_n};

std::string_view to_string(MetaFeature f);

struct FeatureTest {
  MetaFeature feature = MetaFeature::p0;
  FisherResult fisher;
};

struct MetaAnalysisResult {
  std::vector<std::string> universe;  // treebanks with a defined p-value
  std::vector<std::string> subset;    // those with p-value > alpha
  std::vector<FeatureTest> features;
};

/// Value of `feature` for a tested summary.
double feature_value(const TreebankSummary& s, MetaFeature feature);

/// Fisher randomization tests of every feature's mean over `subset` (indices
/// into `summaries`). Feature f draws from rng.child(f).
MetaAnalysisResult meta_analysis(std::span<const TreebankSummary> summaries,
                                 std::span<const std::size_t> subset,
                                 std::int64_t replicas, const RandomSource& rng,
                                 unsigned jobs = 1);

/// Restricts to tested treebanks and takes the subset whose p-value > alpha.
/// Throws DomainError when that subset is empty or covers every treebank.
MetaAnalysisResult meta_analysis(std::span<const TreebankSummary> summaries, double alpha,
                                 std::int64_t replicas, const RandomSource& rng,
                                 unsigned jobs = 1);

}  // namespace crossdep
