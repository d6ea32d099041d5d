// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// CoNLL-X style treebank reader and token classification.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crossdep {

enum class TokenClass { regular, punctuation, null_element };

enum class PunctuationRule {
  unicode_form,  // every code point of FORM has general category P*
  pos_tag_set,   // POSTAG is in IngestConfig::punct_tags
  combined,      // either of the above
};

enum class Strictness { skip_malformed, fail_fast };

struct IngestConfig {
  PunctuationRule punctuation_rule = PunctuationRule::unicode_form;
  std::set<std::string> punct_tags;
  std::vector<std::string> null_forms = {"NULL"};
  Strictness strictness = Strictness::skip_malformed;

  /// Throws DomainError if the pos-tag rule is selected with no tags.
  void validate() const;
};

struct RawToken {
  int index = 0;  // 1-based
  std::string form;
  std::string pos_tag;
  int head = 0;  // 0 = root
  TokenClass token_class = TokenClass::regular;

  friend bool operator==(const RawToken&, const RawToken&) = default;
};

struct RawSentence {
  std::vector<RawToken> tokens;
  std::string source_id;

  std::size_t size() const { return tokens.size(); }
  friend bool operator==(const RawSentence&, const RawSentence&) = default;
};

struct ParseResult {
  std::vector<RawSentence> sentences;
  std::size_t blocks = 0;   // non-empty blocks seen, including skipped ones
  std::size_t skipped = 0;  // blocks dropped as malformed
  std::vector<std::string> warnings;
};

TokenClass classify_token(const RawToken& token, const IngestConfig& config);

/// True iff `text` is non-empty valid UTF-8 made only of punctuation code
/// points.
bool is_punctuation_form(std::string_view text);

/// Reads blank-line separated blocks of tab-separated rows. `source_name`
/// prefixes each sentence's source_id as "<source_name>#<block ordinal>".
/// Comment lines ("#...") and multiword/empty-node rows ("3-4", "3.1") are
/// ignored.
ParseResult parse_conll(std::istream& in, const IngestConfig& config,
                        std::string_view source_name = "stdin");

ParseResult parse_conll_file(const std::string& path,
                             const IngestConfig& config);

/// Writes one sentence as 10-column CoNLL-X rows followed by a blank line.
/// Fields not carried by RawToken are written as "_".
void write_conll(std::ostream& out, const RawSentence& sentence);

std::string_view to_string(TokenClass c);

}  // namespace crossdep
