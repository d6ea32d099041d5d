// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// crossdep: crossing/dependency-length analysis of dependency treebanks.
//
//   crossdep analyze  corpus.conll...   Table-1/Table-2 summaries
//   crossdep metrics  corpus.conll...   per-sentence source_id, n, D, C, Q
//   crossdep meta     analyze.json...   Fisher randomization meta-analysis
//   crossdep simulate --kind K --n N    synthetic trees (CoNLL or metrics)
//   crossdep validate corpus.conll...   parse/prune/tree-validation counts
//
// Exit codes: 0 ok, 1 usage, 2 I/O, 3 degenerate statistics.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "crossdep/conll.hpp"
#include "crossdep/crossings.hpp"
#include "crossdep/error.hpp"
#include "crossdep/generators.hpp"
#include "crossdep/pipeline.hpp"
#include "crossdep/report.hpp"

namespace {

using namespace crossdep;

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kDegenerate = 3 };

struct RunConfig {
  std::vector<std::string> inputs;
  std::int64_t t_replicas = kDefaultReplicas;
  std::int64_t meta_replicas = kDefaultMetaReplicas;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 42;
  std::string punct_rule = "form";
  std::vector<std::string> punct_tags;
  std::vector<std::string> null_forms = {"NULL"};
  bool fail_fast = false;
  std::string format = "tsv";
  unsigned jobs = 1;
  std::string output;
  std::string input_format = "conll";
  std::string universe = "accepted";

  // simulate
  std::string kind = "uniform-random";
  int n = 10;
  int count = 1;
  std::vector<int> order;
  int hub = 1;
  bool all_placements = false;
  bool shuffle = false;
  std::string emit = "conll";

  // validate
  std::string trace_path;
};

IngestConfig ingest_config(const RunConfig& cfg) {
  IngestConfig ic;
  if (cfg.punct_rule == "form")
    ic.punctuation_rule = PunctuationRule::unicode_form;
  else if (cfg.punct_rule == "pos")
    ic.punctuation_rule = PunctuationRule::pos_tag_set;
  else
    ic.punctuation_rule = PunctuationRule::combined;
  ic.punct_tags.insert(cfg.punct_tags.begin(), cfg.punct_tags.end());
  ic.null_forms = cfg.null_forms;
  ic.strictness = cfg.fail_fast ? Strictness::fail_fast : Strictness::skip_malformed;
  try {
    ic.validate();
  } catch (const DomainError& e) {
    throw CLI::ValidationError("--punct-tags", e.what());
  }
  return ic;
}

std::string treebank_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

unsigned resolve_jobs(unsigned jobs) {
  return jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
}

// Writes to --output when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report_warnings(const ValidationReport& rep) {
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  if (rep.skipped_malformed > 0)
    std::cerr << "warning: " << rep.name << ": skipped " << rep.skipped_malformed
              << " malformed sentence(s)\n";
}

std::vector<SentenceMetrics> load_metrics(const RunConfig& cfg, const std::string& path,
                                          const IngestConfig& ic) {
  if (cfg.input_format == "metrics") {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_metrics_tsv(in);
  }
  auto corpus = load_corpus(path, ic, path);
  report_warnings(corpus.report);
  return std::move(corpus.metrics);
}

int run_analyze(const RunConfig& cfg) {
  const auto ic = ingest_config(cfg);
  AnalyzeReport report;
  report.settings = {cfg.t_replicas, cfg.alpha, cfg.seed,
                     cfg.universe == "analyzed" ? SentenceUniverse::analyzed
                                                : SentenceUniverse::accepted};
  SummaryOptions options{cfg.t_replicas, report.settings.universe, resolve_jobs(cfg.jobs)};
  const RandomSource root(cfg.seed);
  for (std::size_t i = 0; i < cfg.inputs.size(); ++i) {
    const auto& path = cfg.inputs[i];
    auto metrics = load_metrics(cfg, path, ic);
    auto summary = summarize(treebank_name(path), metrics, options, root.child(i));
    if (!summary.tested())
      std::cerr << "warning: " << path << ": no length group survives exclusions (M = 0)\n";
    report.treebanks.push_back(std::move(summary));
  }
  Output out(cfg.output);
  if (cfg.format == "json")
    out.stream() << to_json(report);
  else
    write_analyze_tsv(out.stream(), report);
  return kOk;
}

int run_metrics(const RunConfig& cfg) {
  const auto ic = ingest_config(cfg);
  Output out(cfg.output);
  std::vector<SentenceMetrics> all;
  for (const auto& path : cfg.inputs) {
    auto corpus = load_corpus(path, ic, path);
    report_warnings(corpus.report);
    std::cerr << "# " << path << ": accepted " << corpus.report.accepted << ", rejected "
              << corpus.report.rejected_total() << ", skipped malformed "
              << corpus.report.skipped_malformed << '\n';
    all.insert(all.end(), corpus.metrics.begin(), corpus.metrics.end());
  }
  write_metrics_tsv(out.stream(), all);
  return kOk;
}

int run_meta(const RunConfig& cfg) {
  std::vector<TreebankSummary> summaries;
  for (const auto& path : cfg.inputs) {
    auto report = analyze_report_from_json(read_file(path));
    summaries.insert(summaries.end(), report.treebanks.begin(), report.treebanks.end());
  }
  MetaReport meta;
  meta.replicas = cfg.meta_replicas;
  meta.alpha = cfg.alpha;
  meta.seed = cfg.seed;
  meta.result = meta_analysis(summaries, cfg.alpha, cfg.meta_replicas, RandomSource(cfg.seed),
                              resolve_jobs(cfg.jobs));
  Output out(cfg.output);
  if (cfg.format == "json")
    out.stream() << to_json(meta);
  else
    write_meta_tsv(out.stream(), meta);
  return kOk;
}

RawSentence as_sentence(const DepTree& tree, std::string id) {
  RawSentence s;
  s.source_id = std::move(id);
  for (int i = 1; i <= tree.size(); ++i) {
    RawToken t;
    t.index = i;
    t.form = "w" + std::to_string(i);
    t.head = tree.head(i);
    s.tokens.push_back(std::move(t));
  }
  return s;
}

int run_simulate(const RunConfig& cfg) {
  auto kind = parse_tree_kind(cfg.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown tree kind " + cfg.kind);

  std::vector<TreeSpec> specs;
  if (cfg.all_placements) {
    if (*kind != TreeKind::star)
      throw CLI::ValidationError("--all-placements", "only applies to --kind star");
    for (int hub = 1; hub <= cfg.n; ++hub) specs.push_back({TreeKind::star, cfg.n, hub, {}});
  } else {
    TreeSpec spec{*kind, cfg.n, {}, {}};
    if (*kind == TreeKind::star) spec.hub_position = cfg.hub;
    if (*kind == TreeKind::linear && !cfg.order.empty()) spec.order = cfg.order;
    specs.assign(static_cast<std::size_t>(std::max(cfg.count, 0)), spec);
  }
  try {
    for (const auto& s : specs) s.validate();
  } catch (const DomainError& e) {
    throw CLI::ValidationError("simulate", e.what());
  }

  const RandomSource root(cfg.seed);
  std::vector<DepTree> trees;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto gen = root.substream(i);
    auto tree = generate(specs[i], gen);
    if (cfg.shuffle) tree = shuffle_linearization(tree, gen);
    trees.push_back(std::move(tree));
  }

  Output out(cfg.output);
  const std::string prefix = "sim-" + cfg.kind + "-n" + std::to_string(cfg.n) + "#";
  if (cfg.emit == "metrics") {
    std::vector<SentenceMetrics> metrics;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      metrics.push_back(compute_metrics(trees[i]));
      metrics.back().source_id = prefix + std::to_string(i + 1);
    }
    write_metrics_tsv(out.stream(), metrics);
  } else {
    for (std::size_t i = 0; i < trees.size(); ++i)
      write_conll(out.stream(), as_sentence(trees[i], prefix + std::to_string(i + 1)));
  }
  return kOk;
}

int run_validate(const RunConfig& cfg) {
  const auto ic = ingest_config(cfg);
  std::vector<ValidationReport> reports;
  std::vector<SentenceTrace> trace;
  for (const auto& path : cfg.inputs) {
    auto corpus = load_corpus(path, ic, path);
    report_warnings(corpus.report);
    trace.insert(trace.end(), corpus.trace.begin(), corpus.trace.end());
    reports.push_back(std::move(corpus.report));
  }
  if (!cfg.trace_path.empty()) {
    std::ofstream t(cfg.trace_path);
    if (!t) throw IoError("cannot write " + cfg.trace_path);
    write_trace_tsv(t, trace);
  }
  Output out(cfg.output);
  if (cfg.format == "json")
    out.stream() << to_json(std::span<const ValidationReport>(reports));
  else
    write_validation_tsv(out.stream(), reports);
  return kOk;
}

void add_ingest_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--punct-rule", cfg.punct_rule, "Punctuation rule")
      ->check(CLI::IsMember({"form", "pos", "combined"}))
      ->envname("CROSSDEP_PUNCT_RULE");
  cmd->add_option("--punct-tags", cfg.punct_tags, "POS tags treated as punctuation")
      ->delimiter(',')
      ->envname("CROSSDEP_PUNCT_TAGS");
  cmd->add_option("--null-forms", cfg.null_forms, "FORM values treated as null elements")
      ->delimiter(',')
      ->envname("CROSSDEP_NULL_FORMS");
  cmd->add_flag("--fail-fast", cfg.fail_fast, "Abort on the first malformed sentence");
}

void add_format_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->envname("CROSSDEP_FORMAT");
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")
      ->envname("CROSSDEP_JOBS");
}

void add_stat_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "Significance level")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("CROSSDEP_ALPHA");
  cmd->add_option("--seed", cfg.seed, "Random seed")->envname("CROSSDEP_SEED");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossings versus dependency lengths in dependency treebanks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "Per-treebank Kendall tau summaries and Monte Carlo test");
  analyze->add_option("inputs", cfg.inputs, "Treebank files (one treebank per file)")
      ->required();
  analyze->add_option("--t-replicas", cfg.t_replicas, "Monte Carlo randomizations")
      ->check(CLI::PositiveNumber)
      ->envname("CROSSDEP_T_REPLICAS");
  analyze->add_option("--input-format", cfg.input_format, "conll, or a metrics TSV dump")
      ->check(CLI::IsMember({"conll", "metrics"}));
  analyze->add_option("--sentence-universe", cfg.universe,
                      "Sentences counted in S and mean length")
      ->check(CLI::IsMember({"accepted", "analyzed"}));
  add_stat_options(analyze, cfg);
  add_ingest_options(analyze, cfg);
  add_format_option(analyze, cfg);
  add_common(analyze, cfg);

  auto* metrics = app.add_subcommand("metrics", "Per-sentence n, D, C, |Q| as TSV");
  metrics->add_option("inputs", cfg.inputs, "Treebank files")->required();
  add_ingest_options(metrics, cfg);
  add_common(metrics, cfg);

  auto* meta = app.add_subcommand("meta", "Fisher randomization meta-analysis of analyze JSON");
  meta->add_option("inputs", cfg.inputs, "JSON files written by analyze --format json")
      ->required();
  meta->add_option("--meta-replicas", cfg.meta_replicas, "Randomization replicas")
      ->check(CLI::PositiveNumber)
      ->envname("CROSSDEP_META_REPLICAS");
  add_stat_options(meta, cfg);
  add_format_option(meta, cfg);
  add_common(meta, cfg);

  auto* simulate = app.add_subcommand("simulate", "Emit synthetic trees");
  simulate->add_option("--kind", cfg.kind, "star, linear or uniform-random")
      ->check(CLI::IsMember({"star", "linear", "uniform-random"}));
  simulate->add_option("--n", cfg.n, "Vertices per tree")->check(CLI::Range(2, 1 << 20));
  simulate->add_option("--count", cfg.count, "Number of trees")->check(CLI::NonNegativeNumber);
  simulate->add_option("--hub", cfg.hub, "Hub position for star trees");
  simulate->add_option("--order", cfg.order, "Vertex order for linear trees")->delimiter(',');
  simulate->add_flag("--all-placements", cfg.all_placements, "Star trees with every hub position");
  simulate->add_flag("--shuffle", cfg.shuffle, "Uniformly random linearization");
  simulate->add_option("--emit", cfg.emit, "conll or metrics")
      ->check(CLI::IsMember({"conll", "metrics"}));
  simulate->add_option("--seed", cfg.seed, "Random seed")->envname("CROSSDEP_SEED");
  simulate->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

  auto* validate = app.add_subcommand("validate", "Parse, prune and tree-validation report");
  validate->add_option("inputs", cfg.inputs, "Treebank files")->required();
  validate->add_option("--trace", cfg.trace_path, "Per-sentence prune/validation TSV");
  add_ingest_options(validate, cfg);
  add_format_option(validate, cfg);
  validate->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(cfg);
    if (*metrics) return run_metrics(cfg);
    if (*meta) return run_meta(cfg);
    if (*simulate) return run_simulate(cfg);
    if (*validate) return run_validate(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  }
  return kUsage;
}
