// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "crossdep/error.hpp"
#include "json.hpp"

namespace crossdep {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kAnalyzeFormat = "crossdep-analyze/1";
constexpr const char* kMetaFormat = "crossdep-meta/1";

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string trim_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string fixed(double x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << x;
  return os.str();
}

std::string display(const std::optional<double>& v, int digits) {
  return v ? format_significant(*v, digits) : "NA";
}

bool rejected(const TreebankSummary& s, double alpha) {
  return s.tested() && *s.p_value() <= alpha;
}

Json summary_json(const TreebankSummary& s, double alpha) {
  Json j;
  j["name"] = s.name;
  j["M"] = s.M;
  j["p_tau_zero"] = optional_number(s.p_tau_zero());
  j["p_tau_pos"] = optional_number(s.p_tau_pos());
  j["p_tau_nonneg"] = optional_number(s.p_tau_nonneg());
  j["p_value"] = optional_number(s.p_value());
  j["p0"] = optional_number(s.p0());
  j["S"] = s.S;
  j["mean_n"] = optional_number(s.mean_n());
  j["rejected"] = s.tested() ? Json(rejected(s, alpha)) : Json(nullptr);
  j["counts"] = {{"tau_zero", s.tau_zero},     {"tau_pos", s.tau_pos},
                 {"tau_neg", s.tau_neg},       {"all_planar", s.all_planar},
                 {"replicas", s.replicas},     {"exceed", s.exceed},
                 {"length_sum", s.length_sum}, {"excluded_lengths", s.excluded_lengths}};
  j["sentence_universe"] = to_string(s.universe);
  return j;
}

TreebankSummary summary_from_json(const Json& j) {
  TreebankSummary s;
  s.name = j.at("name").get<std::string>();
  s.M = j.at("M").get<std::int64_t>();
  s.S = j.at("S").get<std::int64_t>();
  const auto& c = j.at("counts");
  s.tau_zero = c.at("tau_zero").get<std::int64_t>();
  s.tau_pos = c.at("tau_pos").get<std::int64_t>();
  s.tau_neg = c.at("tau_neg").get<std::int64_t>();
  s.all_planar = c.at("all_planar").get<std::int64_t>();
  s.replicas = c.at("replicas").get<std::int64_t>();
  s.exceed = c.at("exceed").get<std::int64_t>();
  s.length_sum = c.at("length_sum").get<std::int64_t>();
  s.excluded_lengths = c.at("excluded_lengths").get<std::int64_t>();
  const auto universe = j.value("sentence_universe", std::string("accepted"));
  s.universe = universe == "analyzed" ? SentenceUniverse::analyzed : SentenceUniverse::accepted;
  return s;
}

template <class T>
T parse_field(std::string_view s, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("metrics line " + std::to_string(line_no) + ": bad " + what);
  return value;
}

}  // namespace

void write_metrics_tsv(std::ostream& out, std::span<const SentenceMetrics> metrics) {
  out << "source_id\tn\tD\tC\tQ\n";
  for (const auto& m : metrics)
    out << m.source_id << '\t' << m.n << '\t' << m.D << '\t' << m.C << '\t' << m.Q << '\n';
}

std::vector<SentenceMetrics> read_metrics_tsv(std::istream& in) {
  std::vector<SentenceMetrics> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#' || line.rfind("source_id\t", 0) == 0) continue;
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    for (auto tab = rest.find('\t'); tab != std::string_view::npos; tab = rest.find('\t')) {
      cols.push_back(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    cols.push_back(rest);
    if (cols.size() != 5)
      throw ParseError("metrics line " + std::to_string(line_no) + ": expected 5 columns");
    SentenceMetrics m;
    m.source_id = std::string(cols[0]);
    m.n = parse_field<int>(cols[1], line_no, "n");
    m.D = parse_field<std::int64_t>(cols[2], line_no, "D");
    m.C = parse_field<std::int64_t>(cols[3], line_no, "C");
    m.Q = parse_field<std::int64_t>(cols[4], line_no, "Q");
    out.push_back(std::move(m));
  }
  return out;
}

void write_trace_tsv(std::ostream& out, std::span<const SentenceTrace> trace) {
  out << "source_id\tn\tremoved_punct\tremoved_null\treattached\toutcome\n";
  for (const auto& t : trace)
    out << t.source_id << '\t' << t.n << '\t' << t.prune.removed_punct << '\t'
        << t.prune.removed_null << '\t' << t.prune.reattached << '\t' << to_string(t.outcome)
        << '\n';
}

std::string format_significant(double x, int digits) {
  if (x == 0) return "0";
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string format_p_value(std::int64_t exceed, std::int64_t replicas) {
  if (replicas <= 0) return "NA";
  if (exceed == 0) {
    std::int64_t power = 1;
    int k = 0;
    while (power < replicas) {
      power *= 10;
      ++k;
    }
    if (power == replicas) return "<10^-" + std::to_string(k);
    return "<" + format_significant(1.0 / static_cast<double>(replicas), 2);
  }
  return trim_zeros(fixed(static_cast<double>(exceed) / static_cast<double>(replicas), 4));
}

std::string to_json(const AnalyzeReport& report) {
  Json j;
  j["format"] = kAnalyzeFormat;
  j["settings"] = {{"t_replicas", report.settings.replicas},
                   {"alpha", report.settings.alpha},
                   {"seed", report.settings.seed},
                   {"sentence_universe", to_string(report.settings.universe)},
                   {"p0_denominator", "analyzed lengths"},
                   {"excluded_lengths", "n < 4 or fewer than 2 sentences"}};
  j["treebanks"] = Json::array();
  for (const auto& s : report.treebanks)
    j["treebanks"].push_back(summary_json(s, report.settings.alpha));
  return j.dump(2) + "\n";
}

AnalyzeReport analyze_report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid analyze JSON: ") + e.what());
  }
  try {
    if (j.value("format", std::string()) != kAnalyzeFormat)
      throw ParseError("not a crossdep analyze report (format tag missing)");
    AnalyzeReport r;
    const auto& st = j.at("settings");
    r.settings.replicas = st.at("t_replicas").get<std::int64_t>();
    r.settings.alpha = st.at("alpha").get<double>();
    r.settings.seed = st.at("seed").get<std::uint64_t>();
    r.settings.universe = st.value("sentence_universe", std::string("accepted")) == "analyzed"
                              ? SentenceUniverse::analyzed
                              : SentenceUniverse::accepted;
    for (const auto& t : j.at("treebanks")) r.treebanks.push_back(summary_from_json(t));
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed analyze JSON: ") + e.what());
  }
}

void write_analyze_tsv(std::ostream& out, const AnalyzeReport& report) {
  out << "treebank\tM\tp(tau=0)\tp(tau>0)\tp-value\n";
  for (const auto& s : report.treebanks) {
    out << s.name << '\t' << s.M << '\t' << display(s.p_tau_zero(), 2) << '\t'
        << display(s.p_tau_pos(), 2) << '\t'
        << (s.tested() ? format_p_value(s.exceed, s.replicas) : "NA") << '\n';
  }
  out << "\ntreebank\tp0\trejected\n";
  std::vector<const TreebankSummary*> order;
  for (const auto& s : report.treebanks) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->p0().value_or(-1.0) > b->p0().value_or(-1.0);
  });
  for (const auto* s : order) {
    out << s->name << '\t' << display(s->p0(), 2) << '\t'
        << (s->tested() ? (rejected(*s, report.settings.alpha) ? "yes" : "no") : "NA") << '\n';
  }
}

std::string to_json(const MetaReport& report) {
  Json j;
  j["format"] = kMetaFormat;
  j["settings"] = {{"meta_replicas", report.replicas},
                   {"alpha", report.alpha},
                   {"seed", report.seed}};
  j["universe"] = report.result.universe;
  j["subset"] = report.result.subset;
  j["features"] = Json::array();
  for (const auto& f : report.result.features) {
    j["features"].push_back({{"feature", to_string(f.feature)},
                             {"mean", f.fisher.observed_mean},
                             {"left_p", f.fisher.left_p()},
                             {"right_p", f.fisher.right_p()},
                             {"replicas", f.fisher.replicas},
                             {"at_or_below", f.fisher.at_or_below},
                             {"at_or_above", f.fisher.at_or_above}});
  }
  return j.dump(2) + "\n";
}

void write_meta_tsv(std::ostream& out, const MetaReport& report) {
  out << "feature\tmean\tleft_p\tright_p\n";
  for (const auto& f : report.result.features) {
    out << to_string(f.feature) << '\t' << fixed(f.fisher.observed_mean, 1) << '\t'
        << format_significant(f.fisher.left_p(), 2) << '\t'
        << format_significant(f.fisher.right_p(), 2) << '\n';
  }
}

void write_validation_tsv(std::ostream& out, std::span<const ValidationReport> reports) {
  out << "file\tblocks\tskipped_malformed\tparsed\taccepted\trejected\trejected_empty\t"
         "rejected_multi_root\trejected_cycle\trejected_disconnected\tremoved_punct\t"
         "removed_null\treattached\n";
  for (const auto& r : reports) {
    auto count = [&](RejectReason reason) {
      auto it = r.rejected.find(reason);
      return it == r.rejected.end() ? std::size_t{0} : it->second;
    };
    out << r.name << '\t' << r.blocks << '\t' << r.skipped_malformed << '\t' << r.parsed << '\t'
        << r.accepted << '\t' << r.rejected_total() << '\t' << count(RejectReason::empty) << '\t'
        << count(RejectReason::multi_root) << '\t' << count(RejectReason::cycle) << '\t'
        << count(RejectReason::disconnected) << '\t' << r.removed_punct << '\t'
        << r.removed_null << '\t' << r.reattached << '\n';
  }
}

std::string to_json(std::span<const ValidationReport> reports) {
  Json j = Json::array();
  for (const auto& r : reports) {
    Json rejected = Json::object();
    for (auto reason : {RejectReason::empty, RejectReason::multi_root, RejectReason::cycle,
                        RejectReason::disconnected}) {
      auto it = r.rejected.find(reason);
      rejected[std::string(to_string(reason))] = it == r.rejected.end() ? 0 : it->second;
    }
    j.push_back({{"file", r.name},
                 {"blocks", r.blocks},
                 {"skipped_malformed", r.skipped_malformed},
                 {"parsed", r.parsed},
                 {"accepted", r.accepted},
                 {"rejected", rejected},
                 {"removed_punct", r.removed_punct},
                 {"removed_null", r.removed_null},
                 {"reattached", r.reattached},
                 {"warnings", r.warnings}});
  }
  return j.dump(2) + "\n";
}

}  // namespace crossdep
