// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Serialization of metrics, summaries and meta-analysis results.
//
// JSON carries full precision and is what `meta` reads back; TSV output is
// rounded for reading and plotting.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "crossdep/crossings.hpp"
#include "crossdep/pipeline.hpp"

namespace crossdep {

// --- per-sentence metrics: source_id, n, D, C, Q --------------------------

void write_metrics_tsv(std::ostream& out, std::span<const SentenceMetrics> metrics);

/// Reads a metrics dump. k2 is not part of the format and is left at 0.
/// Throws ParseError on malformed rows.
std::vector<SentenceMetrics> read_metrics_tsv(std::istream& in);

/// Prune/validation trace: source_id, n, removed_punct, removed_null,
/// reattached, outcome.
void write_trace_tsv(std::ostream& out, std::span<const SentenceTrace> trace);

// --- display helpers -------------------------------------------------------

/// Rounds to `digits` significant digits and prints without trailing zeros
/// ("0.067", "0.7", "1", "0").
std::string format_significant(double x, int digits);

/// A Monte Carlo p-value: exceed/replicas to four decimals, or "<10^-k" when
/// no replica exceeded (replicas = 10^k), else "<" + 1/replicas.
std::string format_p_value(std::int64_t exceed, std::int64_t replicas);

// --- analyze output --------------------------------------------------------

struct AnalyzeSettings {
  std::int64_t replicas = kDefaultReplicas;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  SentenceUniverse universe = SentenceUniverse::accepted;
};

struct AnalyzeReport {
  AnalyzeSettings settings;
  std::vector<TreebankSummary> treebanks;
};

std::string to_json(const AnalyzeReport& report);
AnalyzeReport analyze_report_from_json(const std::string& text);

/// Table-1 rows (name, M, p(tau=0), p(tau>0), p-value) followed by a blank
/// line and Table-2 rows (name, p0, rejected) sorted by descending p0.
void write_analyze_tsv(std::ostream& out, const AnalyzeReport& report);

// --- meta output -----------------------------------------------------------

struct MetaReport {
  std::int64_t replicas = kDefaultMetaReplicas;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  MetaAnalysisResult result;
};

std::string to_json(const MetaReport& report);

/// Rows: feature, mean (one decimal), left p, right p (two significant
/// digits).
void write_meta_tsv(std::ostream& out, const MetaReport& report);

// --- validate output -------------------------------------------------------

void write_validation_tsv(std::ostream& out, std::span<const ValidationReport> reports);
std::string to_json(std::span<const ValidationReport> reports);

}  // namespace crossdep
