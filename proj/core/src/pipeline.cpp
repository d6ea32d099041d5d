// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/pipeline.hpp"

#include <algorithm>

#include "crossdep/error.hpp"

namespace crossdep {
namespace {

std::optional<double> ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::size_t ValidationReport::rejected_total() const {
  std::size_t total = 0;
  for (const auto& [reason, count] : rejected) total += count;
  return total;
}

CorpusMetrics measure_corpus(const ParseResult& parsed, std::string name) {
  CorpusMetrics out;
  auto& rep = out.report;
  rep.name = std::move(name);
  rep.blocks = parsed.blocks;
  rep.skipped_malformed = parsed.skipped;
  rep.parsed = parsed.sentences.size();
  rep.warnings = parsed.warnings;

  for (const auto& raw : parsed.sentences) {
    auto pruned = prune_and_reattach(raw);
    rep.removed_punct += pruned.report.removed_punct;
    rep.removed_null += pruned.report.removed_null;
    rep.reattached += pruned.report.reattached;

    SentenceTrace trace{raw.source_id, static_cast<int>(pruned.sentence.size()),
                        pruned.report, RejectReason::none};
    if (pruned.report.dropped_nontree) {
      trace.outcome = RejectReason::cycle;
    } else {
      auto built = build_tree(pruned.sentence);
      trace.outcome = built.reason;
      if (built.tree) out.metrics.push_back(compute_metrics(*built.tree));
    }
    if (trace.outcome == RejectReason::none)
      ++rep.accepted;
    else
      ++rep.rejected[trace.outcome];
    out.trace.push_back(std::move(trace));
  }
  return out;
}

CorpusMetrics load_corpus(const std::string& path, const IngestConfig& config,
                          std::string name) {
  return measure_corpus(parse_conll_file(path, config), std::move(name));
}

Grouping group_by_length(std::span<const SentenceMetrics> metrics) {
  std::map<int, LengthGroup> by_n;
  for (const auto& m : metrics) {
    auto& g = by_n[m.n];
    g.n = m.n;
    g.d.push_back(m.D);
    g.c.push_back(m.C);
  }
  Grouping out;
  out.excluded.distinct_lengths = by_n.size();
  for (auto& [n, g] : by_n) {
    if (n < kMinAnalyzedLength)
      out.excluded.too_short.push_back(n);
    else if (g.size() < 2)
      out.excluded.too_sparse.push_back(n);
    else
      out.groups.push_back(std::move(g));
  }
  return out;
}

std::string_view to_string(SentenceUniverse u) {
  return u == SentenceUniverse::accepted ? "accepted" : "analyzed";
}

std::optional<double> TreebankSummary::p_tau_zero() const { return ratio(tau_zero, M); }
std::optional<double> TreebankSummary::p_tau_pos() const { return ratio(tau_pos, M); }
std::optional<double> TreebankSummary::p_tau_nonneg() const {
  return ratio(tau_zero + tau_pos, M);
}
std::optional<double> TreebankSummary::p_value() const {
  if (M == 0) return std::nullopt;
  return ratio(exceed, replicas);
}
std::optional<double> TreebankSummary::p0() const { return ratio(all_planar, M); }
std::optional<double> TreebankSummary::mean_n() const { return ratio(length_sum, S); }

TreebankSummary treebank_summary(std::string name, const Grouping& grouping,
                                 std::span<const SentenceMetrics> metrics,
                                 const SummaryOptions& options, const RandomSource& rng) {
  TreebankSummary s;
  s.name = std::move(name);
  s.universe = options.universe;
  s.M = static_cast<std::int64_t>(grouping.groups.size());
  s.excluded_lengths = static_cast<std::int64_t>(grouping.excluded.count());

  if (options.universe == SentenceUniverse::accepted) {
    for (const auto& m : metrics) {
      ++s.S;
      s.length_sum += m.n;
    }
  } else {
    for (const auto& g : grouping.groups) {
      s.S += static_cast<std::int64_t>(g.size());
      s.length_sum += static_cast<std::int64_t>(g.size()) * g.n;
    }
  }

  if (s.M == 0) return s;

  for (const auto& g : grouping.groups) s.all_planar += all_zero(g.c);
  auto mc = monte_carlo_p_tau(grouping.groups, options.replicas, rng, options.jobs);
  s.tau_zero = mc.tau_zero;
  s.tau_pos = mc.tau_pos;
  s.tau_neg = mc.groups - mc.tau_nonneg;
  s.replicas = mc.replicas;
  s.exceed = mc.exceed;
  return s;
}

TreebankSummary summarize(std::string name, std::span<const SentenceMetrics> metrics,
                          const SummaryOptions& options, const RandomSource& rng) {
  return treebank_summary(std::move(name), group_by_length(metrics), metrics, options, rng);
}

std::string_view to_string(MetaFeature f) {
  switch (f) {
    case MetaFeature::p0: return "p0";
    case MetaFeature::S: return "S";
    case MetaFeature::M: return "M";
    case MetaFeature::mean_n: return "mean_n";
  }
  return "?";
}

double feature_value(const TreebankSummary& s, MetaFeature feature) {
  switch (feature) {
    case MetaFeature::p0:
      if (!s.p0()) break;
      return *s.p0();
    case MetaFeature::S: return static_cast<double>(s.S);
    case MetaFeature::M: return static_cast<double>(s.M);
    case MetaFeature::mean_n:
      if (!s.mean_n()) break;
      return *s.mean_n();
  }
  throw DomainError("treebank " + s.name + " has no value for feature " +
                    std::string(to_string(feature)));
}

MetaAnalysisResult meta_analysis(std::span<const TreebankSummary> summaries,
                                 std::span<const std::size_t> subset,
                                 std::int64_t replicas, const RandomSource& rng,
                                 unsigned jobs) {
  if (summaries.size() < 2) throw DomainError("meta-analysis needs at least two treebanks");
  if (subset.empty()) throw DomainError("empty non-rejected subset");
  if (subset.size() >= summaries.size())
    throw DomainError("non-rejected subset contains every treebank");

  MetaAnalysisResult out;
  for (const auto& s : summaries) out.universe.push_back(s.name);
  for (auto i : subset) {
    if (i >= summaries.size()) throw DomainError("subset index out of range");
    out.subset.push_back(summaries[i].name);
  }
  for (auto f : kMetaFeatures) {
    std::vector<double> values;
    values.reserve(summaries.size());
    for (const auto& s : summaries) values.push_back(feature_value(s, f));
    out.features.push_back(
        {f, fisher_randomization_mean(values, subset, replicas,
                                      rng.child(static_cast<std::uint64_t>(f)), jobs)});
  }
  return out;
}

MetaAnalysisResult meta_analysis(std::span<const TreebankSummary> summaries, double alpha,
                                 std::int64_t replicas, const RandomSource& rng,
                                 unsigned jobs) {
  std::vector<TreebankSummary> tested;
  std::vector<std::size_t> subset;
  for (const auto& s : summaries) {
    if (!s.tested()) continue;
    if (*s.p_value() > alpha) subset.push_back(tested.size());
    tested.push_back(s);
  }
  if (tested.size() < 2) throw DomainError("meta-analysis needs at least two tested treebanks");
  if (subset.empty()) throw DomainError("empty non-rejected subset: every treebank has p-value <= alpha");
  if (subset.size() == tested.size())
    throw DomainError("non-rejected subset contains every treebank: no treebank has p-value <= alpha");
  return meta_analysis(tested, subset, replicas, rng, jobs);
}

}  // namespace crossdep
