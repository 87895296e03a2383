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

#include "simpeval/textproc.h"

#include <utility>

#include "simpeval/error.h"

namespace simpeval {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsVowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

void Push(TokenSeq& seq, std::string_view text, std::size_t begin,
          std::size_t end) {
  seq.tokens.push_back(AsciiLower(text.substr(begin, end - begin)));
  seq.spans.push_back({begin, end});
}

// Calls fn(begin, end) for each maximal run of non-whitespace bytes.
template <typename Fn>
void ForEachChunk(std::string_view text, Fn&& fn) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > start) fn(start, i);
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

void NGramMultiset::Add(NGram gram, int count) {
  if (count <= 0) return;
  counts_[std::move(gram)] += count;
}

int NGramMultiset::Count(const NGram& gram) const {
  auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

long NGramMultiset::Total() const {
  long total = 0;
  for (const auto& [gram, count] : counts_) total += count;
  return total;
}

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

TokenSeq Tokenize(std::string_view text) {
  TokenSeq seq;
  ForEachChunk(text, [&](std::size_t begin, std::size_t end) {
    while (begin < end && IsAsciiPunct(text[begin])) {
      Push(seq, text, begin, begin + 1);
      ++begin;
    }
    std::size_t core_end = end;
    while (core_end > begin && IsAsciiPunct(text[core_end - 1])) --core_end;
    if (core_end > begin) Push(seq, text, begin, core_end);
    for (std::size_t i = core_end; i < end; ++i) Push(seq, text, i, i + 1);
  });
  return seq;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 < text.size() && !IsAsciiSpace(text[i + 1])) continue;
    std::string_view sentence = Trim(text.substr(start, i + 1 - start));
    if (!sentence.empty()) sentences.emplace_back(sentence);
    start = i + 1;
  }
  std::string_view rest = Trim(text.substr(start));
  if (!rest.empty()) sentences.emplace_back(rest);
  return sentences;
}

NGramMultiset NGrams(const std::vector<std::string>& tokens, int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "n-gram order must be >= 1, got " + std::to_string(n));
  }
  NGramMultiset out(n);
  const std::size_t order = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    out.Add(NGram(tokens.begin() + i, tokens.begin() + i + order));
  }
  return out;
}

NGramMultiset NGrams(const TokenSeq& tokens, int n) {
  return NGrams(tokens.tokens, n);
}

int CountSyllables(std::string_view word) {
  if (word.empty()) return 1;
  for (char c : word) {
    if (!IsAsciiAlpha(c)) return 1;
  }
  const std::string lower = AsciiLower(word);
  int groups = 0;
  bool in_group = false;
  for (char c : lower) {
    bool vowel = IsVowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  // Silent final e, except consonant + "le" (table, little).
  const std::size_t n = lower.size();
  const bool consonant_le =
      n >= 3 && lower[n - 2] == 'l' && lower[n - 1] == 'e' && !IsVowel(lower[n - 3]);
  if (lower.back() == 'e' && groups > 1 && !consonant_le) --groups;
  return groups < 1 ? 1 : groups;
}

TokenSeq NormalizeAnswer(std::string_view text) {
  TokenSeq seq;
  ForEachChunk(text, [&](std::size_t begin, std::size_t end) {
    while (begin < end && IsAsciiPunct(text[begin])) ++begin;
    while (end > begin && IsAsciiPunct(text[end - 1])) --end;
    if (end > begin) Push(seq, text, begin, end);
  });
  return seq;
}

std::string Join(const std::vector<std::string>& tokens,
                 std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

}  // namespace simpeval
