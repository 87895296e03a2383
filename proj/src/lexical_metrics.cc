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

#include "simpeval/lexical_metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "simpeval/error.h"

namespace simpeval {
namespace {

bool HasAlnum(const std::string& token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
           (c >= 'A' && c <= 'Z') || static_cast<unsigned char>(c) >= 0x80;
  });
}

std::vector<std::vector<std::string>> TokenizeAll(
    const std::vector<std::string>& texts) {
  std::vector<std::vector<std::string>> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(Tokenize(t).tokens);
  return out;
}

using Counts = std::map<NGram, double>;

Counts ToCounts(const NGramMultiset& m, double scale) {
  Counts out;
  for (const auto& [gram, count] : m.counts()) out[gram] = count * scale;
  return out;
}

double Lookup(const Counts& c, const NGram& g) {
  auto it = c.find(g);
  return it == c.end() ? 0.0 : it->second;
}

// Multiset intersection (element-wise min, positive entries only).
Counts Intersect(const Counts& a, const Counts& b) {
  Counts out;
  for (const auto& [gram, count] : a) {
    double v = std::min(count, Lookup(b, gram));
    if (v > 0) out[gram] = v;
  }
  return out;
}

// Multiset difference (positive part of a - b).
Counts Subtract(const Counts& a, const Counts& b) {
  Counts out;
  for (const auto& [gram, count] : a) {
    double v = count - Lookup(b, gram);
    if (v > 0) out[gram] = v;
  }
  return out;
}

double F1(double p, double r) {
  return (p > 0 || r > 0) ? 2 * p * r / (p + r) : 0.0;
}

struct OrderScores {
  double add = 0, keep = 0, del = 0;
};

OrderScores SariForOrder(const NGramMultiset& source,
                         const NGramMultiset& candidate,
                         const std::vector<NGramMultiset>& references,
                         VacuousSets vacuous) {
  const double num_refs = static_cast<double>(references.size());
  const double vacuous_score = vacuous == VacuousSets::kScoreOne ? 1.0 : 0.0;

  // Source and candidate are replicated once per reference so that pooled
  // reference counts act as counts averaged over references.
  Counts src = ToCounts(source, num_refs);
  Counts cand = ToCounts(candidate, num_refs);
  Counts refs;
  for (const NGramMultiset& r : references) {
    for (const auto& [gram, count] : r.counts()) refs[gram] += count;
  }

  OrderScores out;

  Counts keep = Intersect(src, cand);
  Counts keep_all = Intersect(src, refs);
  if (keep.empty() && keep_all.empty()) {
    out.keep = vacuous_score;
  } else {
    Counts keep_good = Intersect(keep, refs);
    double p_sum = 0, r_sum = 0;
    for (const auto& [gram, good] : keep_good) {
      p_sum += good / keep.at(gram);
      r_sum += good / keep_all.at(gram);
    }
    double p = keep.empty() ? 0.0 : p_sum / static_cast<double>(keep.size());
    double r = keep_all.empty() ? 0.0
                                : r_sum / static_cast<double>(keep_all.size());
    out.keep = F1(p, r);
  }

  Counts del = Subtract(src, cand);
  Counts del_all = Subtract(src, refs);
  if (del.empty() && del_all.empty()) {
    out.del = vacuous_score;
  } else {
    Counts del_good = Subtract(del, refs);
    double p_sum = 0;
    for (const auto& [gram, good] : del_good) p_sum += good / del.at(gram);
    out.del = del.empty() ? 0.0 : p_sum / static_cast<double>(del.size());
  }

  // Additions are scored on n-gram types, not counts.
  std::set<NGram> added, added_all;
  for (const auto& [gram, c] : candidate.counts()) {
    if (!source.Count(gram)) added.insert(gram);
  }
  for (const auto& [gram, c] : refs) {
    if (!source.Count(gram)) added_all.insert(gram);
  }
  if (added.empty() && added_all.empty()) {
    out.add = vacuous_score;
  } else {
    double good = 0;
    for (const NGram& gram : added) good += added_all.count(gram) ? 1 : 0;
    double p = added.empty() ? 0.0 : good / static_cast<double>(added.size());
    double r = added_all.empty()
                   ? 0.0
                   : good / static_cast<double>(added_all.size());
    out.add = F1(p, r);
  }
  return out;
}

void RequireReferences(const std::vector<std::string>& references,
                       const char* metric) {
  if (references.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(metric) + " needs at least one reference");
  }
}

}  // namespace

ReadabilityCounts CountReadability(std::string_view text) {
  ReadabilityCounts counts;
  counts.sentences = static_cast<int>(SplitSentences(text).size());
  for (const std::string& token : Tokenize(text).tokens) {
    if (!HasAlnum(token)) continue;
    ++counts.words;
    counts.syllables += CountSyllables(token);
  }
  return counts;
}

double FkglFromCounts(const ReadabilityCounts& counts) {
  if (counts.words <= 0 || counts.sentences <= 0) {
    throw Error(ErrorCode::kDegenerateInput, "FKGL needs at least one word");
  }
  const double words = counts.words;
  return 0.39 * (words / counts.sentences) +
         11.8 * (counts.syllables / words) - 15.59;
}

MetricScore Fkgl(std::string_view text) {
  return MakeScore(Metric::kFkgl, FkglFromCounts(CountReadability(text)));
}

double SentenceBleu(const std::vector<std::string>& candidate,
                    const std::vector<std::vector<std::string>>& references) {
  if (candidate.empty() || references.empty()) return 0.0;

  double log_sum = 0.0;
  for (int n = 1; n <= kMaxNGramOrder; ++n) {
    NGramMultiset cand = NGrams(candidate, n);
    std::map<NGram, int> max_ref;
    for (const auto& ref : references) {
      const NGramMultiset grams = NGrams(ref, n);
      for (const auto& [gram, count] : grams.counts()) {
        int& slot = max_ref[gram];
        slot = std::max(slot, count);
      }
    }
    long matched = 0;
    for (const auto& [gram, count] : cand.counts()) {
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) matched += std::min(count, it->second);
    }
    const long total = cand.Total();
    double precision;
    if (matched > 0) {
      precision = static_cast<double>(matched) / static_cast<double>(total);
    } else if (n == 1) {
      return 0.0;
    } else {
      precision = 1.0 / static_cast<double>(total + 1);
    }
    log_sum += std::log(precision);
  }

  const long c = static_cast<long>(candidate.size());
  long closest = static_cast<long>(references.front().size());
  for (const auto& ref : references) {
    const long len = static_cast<long>(ref.size());
    const long d = std::labs(len - c), best = std::labs(closest - c);
    if (d < best || (d == best && len < closest)) closest = len;
  }
  const double brevity =
      c >= closest ? 1.0
                   : std::exp(1.0 - static_cast<double>(closest) /
                                        static_cast<double>(c));
  return brevity * std::exp(log_sum / kMaxNGramOrder);
}

MetricScore Bleu(std::string_view candidate,
                 const std::vector<std::string>& references) {
  RequireReferences(references, "BLEU");
  return MakeScore(Metric::kBleu, SentenceBleu(Tokenize(candidate).tokens,
                                               TokenizeAll(references)));
}

SariBreakdown SentenceSari(
    const std::vector<std::string>& source,
    const std::vector<std::string>& candidate,
    const std::vector<std::vector<std::string>>& references,
    const SariOptions& options) {
  if (references.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "SARI needs at least one reference");
  }
  SariBreakdown out;
  double total = 0.0;
  for (int n = 1; n <= kMaxNGramOrder; ++n) {
    std::vector<NGramMultiset> refs;
    refs.reserve(references.size());
    for (const auto& r : references) refs.push_back(NGrams(r, n));
    OrderScores s = SariForOrder(NGrams(source, n), NGrams(candidate, n), refs,
                                 options.vacuous);
    out.add_f1[n - 1] = s.add;
    out.keep_f1[n - 1] = s.keep;
    out.del_precision[n - 1] = s.del;
    total += (s.add + s.keep + s.del) / 3.0;
  }
  out.score = 100.0 * total / kMaxNGramOrder;
  return out;
}

MetricScore Sari(std::string_view source, std::string_view candidate,
                 const std::vector<std::string>& references,
                 const SariOptions& options) {
  RequireReferences(references, "SARI");
  std::vector<std::string> src = Tokenize(source).tokens;
  if (src.empty()) throw Error(ErrorCode::kEmptyText, "SARI needs a non-empty source");
  return MakeScore(Metric::kSari,
                   SentenceSari(src, Tokenize(candidate).tokens,
                                TokenizeAll(references), options)
                       .score);
}

}  // namespace simpeval
