// Copyright 2026 The Simpeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic text primitives shared by every metric.

#ifndef SIMPEVAL_TEXTPROC_H_
#define SIMPEVAL_TEXTPROC_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace simpeval {

// Byte range [begin, end) in the text a token was read from.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

// Lowercased tokens with their source spans. Spans are strictly increasing
// and never overlap; no token is empty.
struct TokenSeq {
  std::vector<std::string> tokens;
  std::vector<Span> spans;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

using NGram = std::vector<std::string>;

// Multiset of contiguous n-grams of one fixed arity. Every stored count is
// at least one.
class NGramMultiset {
 public:
  explicit NGramMultiset(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<NGram, int>& counts() const { return counts_; }

  void Add(NGram gram, int count = 1);
  int Count(const NGram& gram) const;
  // Sum of all multiplicities.
  long Total() const;
  bool empty() const { return counts_.empty(); }

 private:
  int n_;
  std::map<NGram, int> counts_;
};

bool IsAsciiPunct(char c);
std::string AsciiLower(std::string_view text);

// Whitespace split, ASCII lowercase, with leading and trailing ASCII
// punctuation peeled off into one token per character.
TokenSeq Tokenize(std::string_view text);

// Splits after '.', '!' or '?' when followed by whitespace or end of text.
// Abbreviations are not special-cased.
std::vector<std::string> SplitSentences(std::string_view text);

// Throws kInvalidArgument when n < 1.
NGramMultiset NGrams(const std::vector<std::string>& tokens, int n);
NGramMultiset NGrams(const TokenSeq& tokens, int n);

// Vowel-group heuristic ("aeiouy"), minus one for a terminal silent 'e'.
// Always at least 1; non-alphabetic input counts as one syllable.
int CountSyllables(std::string_view word);

// Answer normalization for token-F1. Lowercases, whitespace-splits and strips
// punctuation around each token. Articles are kept.
TokenSeq NormalizeAnswer(std::string_view text);

std::string Join(const std::vector<std::string>& tokens,
                 std::string_view sep = " ");

}  // namespace simpeval

#endif  // SIMPEVAL_TEXTPROC_H_
