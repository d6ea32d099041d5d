// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "crossdep/conll.hpp"
#include "crossdep/error.hpp"
#include "crossdep/random.hpp"
#include "doctest.h"

using namespace crossdep;

namespace {

ParseResult parse(const std::string& text, IngestConfig cfg = {}) {
  std::istringstream in(text);
  return parse_conll(in, cfg, "t");
}

RawToken token(std::string form, std::string pos = "") {
  RawToken t;
  t.index = 1;
  t.form = std::move(form);
  t.pos_tag = std::move(pos);
  return t;
}

const std::string kThreeRows =
    "1\tA\t_\t_\tX\t_\t2\tdep\n"
    "2\tB\t_\t_\tX\t_\t0\troot\n"
    "3\tC\t_\t_\tX\t_\t2\tdep\n";

}  // namespace

TEST_CASE("parse_conll: empty stream yields no sentences") {
  auto r = parse("");
  CHECK(r.sentences.empty());
  CHECK(r.blocks == 0);
}

TEST_CASE("parse_conll: maps ID, FORM, POSTAG and HEAD") {
  auto r = parse(kThreeRows);
  REQUIRE(r.sentences.size() == 1);
  const auto& s = r.sentences[0];
  CHECK(s.source_id == "t#1");
  REQUIRE(s.tokens.size() == 3);
  CHECK(s.tokens[0].head == 2);
  CHECK(s.tokens[1].head == 0);
  CHECK(s.tokens[2].head == 2);
  CHECK(s.tokens[1].form == "B");
  CHECK(s.tokens[1].pos_tag == "X");
  CHECK(s.tokens[2].index == 3);
}

TEST_CASE("parse_conll: out-of-range head skips the sentence") {
  auto r = parse("1\tA\t_\t_\tX\t_\t2\tdep\n2\tB\t_\t_\tX\t_\t0\troot\n3\tC\t_\t_\tX\t_\t7\tdep\n\n" +
                 kThreeRows);
  CHECK(r.blocks == 2);
  CHECK(r.skipped == 1);
  REQUIRE(r.sentences.size() == 1);
  CHECK(r.sentences[0].source_id == "t#2");
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("out of range") != std::string::npos);
}

TEST_CASE("parse_conll: fail-fast aborts on the first malformed sentence") {
  IngestConfig cfg;
  cfg.strictness = Strictness::fail_fast;
  CHECK_THROWS_AS(parse("1\tA\t_\tX\n", cfg), ParseError);
  CHECK_THROWS_AS(parse("1\tA\t_\t_\tX\t_\tx\tdep\n", cfg), ParseError);
  CHECK_NOTHROW(parse(kThreeRows, cfg));
}

TEST_CASE("parse_conll: malformed fixture") {
  auto r = parse_conll_file(CROSSDEP_FIXTURES "/malformed.conll", {});
  CHECK(r.blocks == 5);
  CHECK(r.skipped == 3);
  REQUIRE(r.sentences.size() == 2);
  CHECK(r.sentences[0].tokens.size() == 2);
  CHECK(r.sentences[1].tokens.size() == 3);
}

TEST_CASE("parse_conll: comments, multiword ranges and CRLF") {
  auto r = parse_conll_file(CROSSDEP_FIXTURES "/multiword.conll", {});
  REQUIRE(r.sentences.size() == 1);
  CHECK(r.sentences[0].tokens.size() == 3);
  CHECK(r.blocks == 1);

  auto crlf = parse("# c\r\n1\tA\t_\t_\tX\t_\t0\troot\r\n\r\n");
  REQUIRE(crlf.sentences.size() == 1);
  CHECK(crlf.sentences[0].tokens[0].head == 0);
}

TEST_CASE("parse_conll: IDs must be 1..n and heads must not be self") {
  CHECK(parse("2\tA\t_\t_\tX\t_\t0\troot\n").skipped == 1);
  CHECK(parse("1\tA\t_\t_\tX\t_\t1\troot\n").skipped == 1);
}

TEST_CASE("parse_conll: multi-root sentences are parsed, not rejected") {
  auto r = parse("1\tA\t_\t_\tX\t_\t0\troot\n2\tB\t_\t_\tX\t_\t0\troot\n");
  CHECK(r.skipped == 0);
  CHECK(r.sentences.size() == 1);
}

TEST_CASE("parse_conll: sentence count equals non-empty block count") {
  Xoshiro256 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    const int blocks = static_cast<int>(gen.below(8));
    for (int b = 0; b < blocks; ++b) {
      const int blank_lines = 1 + static_cast<int>(gen.below(3));
      text += kThreeRows + std::string(static_cast<std::size_t>(blank_lines), '\n');
    }
    CHECK(parse(text).sentences.size() == static_cast<std::size_t>(blocks));
  }
}

TEST_CASE("classify_token") {
  IngestConfig cfg;
  CHECK(classify_token(token(","), cfg) == TokenClass::punctuation);
  CHECK(classify_token(token("NULL"), cfg) == TokenClass::null_element);
  CHECK(classify_token(token("word,"), cfg) == TokenClass::regular);
  CHECK(classify_token(token("..."), cfg) == TokenClass::punctuation);
  CHECK(classify_token(token("\xC2\xBF"), cfg) == TokenClass::punctuation);      // U+00BF
  CHECK(classify_token(token("\xE3\x80\x82"), cfg) == TokenClass::punctuation);  // U+3002
  CHECK(classify_token(token("\xE2\x80\x94"), cfg) == TokenClass::punctuation);  // U+2014 em dash, Pd
  CHECK(classify_token(token("+"), cfg) == TokenClass::regular);                 // Sm, not P*
  CHECK(classify_token(token("$"), cfg) == TokenClass::regular);                 // Sc
  CHECK(classify_token(token("\xC3\xA9"), cfg) == TokenClass::regular);          // e-acute
  CHECK(classify_token(token(""), cfg) == TokenClass::regular);
  CHECK(classify_token(token("\xFF"), cfg) == TokenClass::regular);  // invalid UTF-8
}

TEST_CASE("classify_token: pos-tag and combined rules") {
  IngestConfig pos;
  pos.punctuation_rule = PunctuationRule::pos_tag_set;
  pos.punct_tags = {"PUNCT", "Z"};
  CHECK(classify_token(token(",", "PUNCT"), pos) == TokenClass::punctuation);
  CHECK(classify_token(token(",", "NN"), pos) == TokenClass::regular);

  IngestConfig combined = pos;
  combined.punctuation_rule = PunctuationRule::combined;
  CHECK(classify_token(token(",", "NN"), combined) == TokenClass::punctuation);
  CHECK(classify_token(token("word", "Z"), combined) == TokenClass::punctuation);

  IngestConfig empty_tags;
  empty_tags.punctuation_rule = PunctuationRule::pos_tag_set;
  CHECK_THROWS_AS(empty_tags.validate(), DomainError);
}

TEST_CASE("classify_token: punctuation takes precedence over null") {
  IngestConfig cfg;
  cfg.null_forms = {",", "*"};
  CHECK(classify_token(token(","), cfg) == TokenClass::punctuation);
  CHECK(classify_token(token("*"), cfg) == TokenClass::punctuation);
  cfg.null_forms = {"*PRO*", "_NULL_"};
  CHECK(classify_token(token("*PRO*"), cfg) == TokenClass::null_element);
  CHECK(classify_token(token("_NULL_"), cfg) == TokenClass::null_element);
  CHECK(classify_token(token("NULL"), cfg) == TokenClass::regular);
}

TEST_CASE("write_conll and parse_conll round-trip") {
  Xoshiro256 gen(5);
  const char* forms[] = {"a", ",", "NULL", "word", "\xE3\x80\x82", "x.y"};
  const char* tags[] = {"", "NN", "PUNCT"};
  IngestConfig cfg;
  cfg.punctuation_rule = PunctuationRule::combined;
  cfg.punct_tags = {"PUNCT"};
  for (int trial = 0; trial < 200; ++trial) {
    RawSentence s;
    s.source_id = "t#1";
    const int n = 1 + static_cast<int>(gen.below(8));
    for (int i = 1; i <= n; ++i) {
      RawToken t;
      t.index = i;
      t.form = forms[gen.below(6)];
      t.pos_tag = tags[gen.below(3)];
      do {
        t.head = static_cast<int>(gen.below(static_cast<std::uint64_t>(n) + 1));
      } while (t.head == i);
      t.token_class = classify_token(t, cfg);
      s.tokens.push_back(t);
    }
    std::ostringstream out;
    write_conll(out, s);
    std::istringstream in(out.str());
    auto back = parse_conll(in, cfg, "t");
    REQUIRE(back.sentences.size() == 1);
    CHECK(back.sentences[0] == s);
  }
}
