// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "crossdep/conll.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>

#include "crossdep/error.hpp"

namespace crossdep {
namespace {

constexpr std::size_t kMinColumns = 8;
constexpr std::size_t kIdCol = 0;
constexpr std::size_t kFormCol = 1;
constexpr std::size_t kPosCol = 4;
constexpr std::size_t kHeadCol = 6;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

bool is_range_or_empty_node(std::string_view id) {
  return id.find('-') != std::string_view::npos ||
         id.find('.') != std::string_view::npos;
}

// Accumulates the rows of one block and turns them into a sentence.
class BlockBuilder {
 public:
  void add_row(std::string_view line, std::size_t line_no) {
    has_content_ = true;
    if (error_) return;
    auto cols = split_tabs(line);
    if (cols.size() < kMinColumns) {
      fail(line_no, "expected at least 8 tab-separated columns");
      return;
    }
    if (is_range_or_empty_node(cols[kIdCol])) return;
    auto id = parse_int(cols[kIdCol]);
    auto head = parse_int(cols[kHeadCol]);
    if (!id || !head) {
      fail(line_no, "non-integer ID or HEAD");
      return;
    }
    RawToken tok;
    tok.index = *id;
    tok.form = std::string(cols[kFormCol]);
    tok.pos_tag = cols[kPosCol] == "_" ? std::string() : std::string(cols[kPosCol]);
    tok.head = *head;
    tokens_.push_back(std::move(tok));
    lines_.push_back(line_no);
  }

  void mark_comment() { has_content_ = true; }
  bool has_content() const { return has_content_; }
  bool has_tokens() const { return !tokens_.empty(); }
  bool has_error() const { return error_.has_value(); }

  // Returns the error message if the block is malformed.
  std::optional<std::string> finish(RawSentence& out) {
    if (error_) return error_;
    const int n = static_cast<int>(tokens_.size());
    for (int i = 0; i < n; ++i) {
      const auto& t = tokens_[static_cast<std::size_t>(i)];
      const auto line = std::to_string(lines_[static_cast<std::size_t>(i)]);
      if (t.index != i + 1)
        return "line " + line + ": token IDs are not 1..n in order";
      if (t.head < 0 || t.head > n)
        return "line " + line + ": HEAD " + std::to_string(t.head) +
               " out of range for a " + std::to_string(n) + "-token sentence";
      if (t.head == t.index)
        return "line " + line + ": token is its own head";
    }
    out.tokens = std::move(tokens_);
    return std::nullopt;
  }

 private:
  void fail(std::size_t line_no, const char* msg) {
    error_ = "line " + std::to_string(line_no) + ": " + msg;
  }

  std::vector<RawToken> tokens_;
  std::vector<std::size_t> lines_;
  std::optional<std::string> error_;
  bool has_content_ = false;
};

}  // namespace

void IngestConfig::validate() const {
  if (punctuation_rule == PunctuationRule::pos_tag_set && punct_tags.empty())
    throw DomainError("pos-tag punctuation rule requires a non-empty tag set");
}

bool is_punctuation_form(std::string_view text) {
  if (text.empty()) return false;
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0 || !u_ispunct(c)) return false;
  }
  return true;
}

TokenClass classify_token(const RawToken& token, const IngestConfig& config) {
  bool punct = false;
  switch (config.punctuation_rule) {
    case PunctuationRule::unicode_form:
      punct = is_punctuation_form(token.form);
      break;
    case PunctuationRule::pos_tag_set:
      punct = config.punct_tags.count(token.pos_tag) > 0;
      break;
    case PunctuationRule::combined:
      punct = is_punctuation_form(token.form) ||
              config.punct_tags.count(token.pos_tag) > 0;
      break;
  }
  if (punct) return TokenClass::punctuation;
  const auto& nulls = config.null_forms;
  if (std::find(nulls.begin(), nulls.end(), token.form) != nulls.end())
    return TokenClass::null_element;
  return TokenClass::regular;
}

ParseResult parse_conll(std::istream& in, const IngestConfig& config,
                        std::string_view source_name) {
  config.validate();
  ParseResult result;
  BlockBuilder block;
  std::size_t ordinal = 0;

  auto flush = [&](std::size_t line_no) {
    if (!block.has_content()) return;
    if (!block.has_tokens() && !block.has_error()) {
      block = BlockBuilder();
      return;  // comment-only block, or only multiword rows
    }
    ++ordinal;
    ++result.blocks;
    RawSentence sentence;
    sentence.source_id = std::string(source_name) + "#" + std::to_string(ordinal);
    if (auto err = block.finish(sentence)) {
      auto msg = sentence.source_id + " (ending line " + std::to_string(line_no) +
                 "): " + *err;
      if (config.strictness == Strictness::fail_fast) throw ParseError(msg);
      ++result.skipped;
      result.warnings.push_back("skipped " + msg);
    } else {
      for (auto& tok : sentence.tokens) tok.token_class = classify_token(tok, config);
      result.sentences.push_back(std::move(sentence));
    }
    block = BlockBuilder();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) {
      flush(line_no);
    } else if (line.front() == '#') {
      block.mark_comment();
    } else {
      block.add_row(line, line_no);
    }
  }
  flush(line_no);
  return result;
}

ParseResult parse_conll_file(const std::string& path,
                             const IngestConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  auto result = parse_conll(in, config, path);
  if (in.bad()) throw IoError("read error on " + path);
  return result;
}

void write_conll(std::ostream& out, const RawSentence& sentence) {
  for (const auto& t : sentence.tokens) {
    out << t.index << '\t' << t.form << "\t_\t_\t"
        << (t.pos_tag.empty() ? "_" : t.pos_tag) << "\t_\t" << t.head
        << '\t' << (t.head == 0 ? "root" : "dep") << "\t_\t_\n";
  }
  out << '\n';
}

std::string_view to_string(TokenClass c) {
  switch (c) {
    case TokenClass::regular: return "regular";
    case TokenClass::punctuation: return "punctuation";
    case TokenClass::null_element: return "null";
  }
  return "?";
}

}  // namespace crossdep
