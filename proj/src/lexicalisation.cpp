// Copyright 2026 The Axmine Authors
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

#include "lexicalisation.hpp"

#include <algorithm>

#include "log.hpp"
#include "text.hpp"

namespace axmine {

namespace {

// Function words that terminate a noun chunk. No POS tagging: this fixed
// list stands in for verb/determiner boundaries.
const std::unordered_set<std::string_view> kChunkBoundary = {
    ",",    "a",     "an",    "the",   "is",    "was",    "are",   "were",
    "be",   "been",  "being", "and",   "or",    "but",    "such",  "as",
    "other", "which", "that",  "who",   "whom",  "whose",  "of",    "in",
    "on",   "at",    "by",    "for",   "from",  "with",   "to",    "into",
    "over", "under", "between", "during", "has", "have",  "had",   "this",
    "these", "those", "it",   "its",   "also",  "not",    "no",
};

bool is_boundary(const std::string& token) {
  return kChunkBoundary.contains(std::string_view(token));
}

std::vector<std::string> chunk_backward(std::span<const std::string> tokens, size_t end) {
  size_t begin = end;
  while (begin > 0 && !is_boundary(tokens[begin - 1])) --begin;
  return {tokens.begin() + begin, tokens.begin() + end};
}

std::vector<std::string> chunk_forward(std::span<const std::string> tokens, size_t begin) {
  size_t end = begin;
  while (end < tokens.size() && !is_boundary(tokens[end])) ++end;
  return {tokens.begin() + begin, tokens.begin() + end};
}

}  // namespace

LexStore::LexStore(SymbolTable& syms, LexGranularity granularity)
    : syms_(&syms), granularity_(granularity) {}

LexStore LexStore::load_tsv(std::istream& in, SymbolTable& syms,
                            LexGranularity granularity) {
  LexStore store(syms, granularity);
  std::string line;
  size_t bad_counts = 0;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      ++bad_counts;
      continue;
    }
    long long count = 0;
    try {
      count = std::stoll(fields[2]);
    } catch (...) {
      ++bad_counts;
      continue;
    }
    if (count < 1) {
      ++bad_counts;
      continue;
    }
    store.add(fields[0], fields[1], static_cast<uint64_t>(count));
  }
  if (bad_counts > 0) {
    log_warn(std::to_string(bad_counts) + " lexicalisation rows skipped");
  }
  return store;
}

void LexStore::add(std::string_view entity, std::string_view phrase, uint64_t count) {
  add(syms_->intern(entity), phrase, count);
}

void LexStore::add(Symbol entity, std::string_view phrase, uint64_t count) {
  std::string key = normalize_phrase(phrase);
  if (key.empty() || count == 0) return;
  PhraseEntry& e = by_phrase_[key];
  e.owner_counts[entity] += count;
  e.total += count;
  by_entity_[entity].insert(key);
}

const LexStore::PhraseEntry* LexStore::entry(std::string_view key) const {
  auto it = by_phrase_.find(std::string(key));
  return it == by_phrase_.end() ? nullptr : &it->second;
}

double LexStore::score(Symbol entity, std::string_view phrase) const {
  std::string key = normalize_phrase(phrase);
  if (granularity_ == LexGranularity::kPhrase) {
    const PhraseEntry* e = entry(key);
    if (e == nullptr || e->total == 0) return 0.0;
    auto it = e->owner_counts.find(entity);
    if (it == e->owner_counts.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(e->total);
  }
  // Word granularity: one combined numerator and denominator over the
  // phrase's words.
  uint64_t num = 0, den = 0;
  for (const std::string& word : split_ws(key)) {
    const PhraseEntry* e = entry(word);
    if (e == nullptr) continue;
    den += e->total;
    auto it = e->owner_counts.find(entity);
    if (it != e->owner_counts.end()) num += it->second;
  }
  if (den == 0) return 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

bool LexStore::has_phrase(Symbol entity, std::string_view phrase) const {
  auto it = by_entity_.find(entity);
  if (it == by_entity_.end()) return false;
  return it->second.contains(normalize_phrase(phrase));
}

std::vector<std::string> LexStore::phrases() const {
  std::vector<std::string> out;
  out.reserve(by_phrase_.size());
  for (const auto& [phrase, unused] : by_phrase_) out.push_back(phrase);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Symbol, uint64_t>> LexStore::owners(std::string_view phrase) const {
  const PhraseEntry* e = entry(normalize_phrase(phrase));
  if (e == nullptr) return {};
  std::vector<std::pair<Symbol, uint64_t>> out(e->owner_counts.begin(),
                                               e->owner_counts.end());
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
    return syms_->less(a.first, b.first);
  });
  return out;
}

size_t LexStore::entry_count() const {
  size_t n = 0;
  for (const auto& [phrase, e] : by_phrase_) n += e.owner_counts.size();
  return n;
}

void LexStore::write_tsv(std::ostream& out) const {
  std::vector<Symbol> entities;
  entities.reserve(by_entity_.size());
  for (const auto& [e, unused] : by_entity_) entities.push_back(e);
  std::sort(entities.begin(), entities.end(),
            [this](Symbol a, Symbol b) { return syms_->less(a, b); });
  for (Symbol e : entities) {
    std::vector<std::string> phrases(by_entity_.at(e).begin(), by_entity_.at(e).end());
    std::sort(phrases.begin(), phrases.end());
    for (const std::string& phrase : phrases) {
      uint64_t count = by_phrase_.at(phrase).owner_counts.at(e);
      out << syms_->at(e) << '\t' << phrase << '\t' << count << '\n';
    }
  }
}

std::vector<HearstMatch> extract_hearst_matches(std::span<const std::string> tokens) {
  std::vector<HearstMatch> out;
  auto emit = [&](std::vector<std::string> subject, std::vector<std::string> object,
                  std::string_view rule) {
    if (subject.empty() || object.empty()) return;
    out.push_back(HearstMatch{std::move(subject), std::move(object), rule});
  };

  const size_t n = tokens.size();
  for (size_t i = 0; i < n; ++i) {
    const std::string& tok = tokens[i];
    if ((tok == "is" || tok == "was") && i + 1 < n) {
      const std::string& det = tokens[i + 1];
      if (det == "a" || det == "an") {
        emit(chunk_backward(tokens, i), chunk_forward(tokens, i + 2), "is_a");
      } else if (det == "the") {
        emit(chunk_backward(tokens, i), chunk_forward(tokens, i + 2), "is_the");
      }
    } else if (tok == "such" && i + 1 < n && tokens[i + 1] == "as") {
      emit(chunk_forward(tokens, i + 2), chunk_backward(tokens, i), "such_as");
    } else if (tok == "and" && i + 1 < n && tokens[i + 1] == "other") {
      emit(chunk_backward(tokens, i), chunk_forward(tokens, i + 2), "and_other");
    } else if (tok == "," && i + 1 < n &&
               (tokens[i + 1] == "a" || tokens[i + 1] == "an")) {
      emit(chunk_backward(tokens, i), chunk_forward(tokens, i + 2), "comma_a");
    }
  }
  return out;
}

LexStore build_type_lexicalisations(const KgIndex& kg, const LexStore& resource_lex,
                                    std::istream& articles, SymbolTable& syms) {
  LexStore store(syms, LexGranularity::kWord);
  std::string line;
  size_t unknown_resources = 0;
  while (std::getline(articles, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 2 || fields[0].empty()) continue;
    auto rsym = syms.find(fields[0]);
    if (!rsym || !kg.known_subject(*rsym)) {
      ++unknown_resources;
      continue;
    }
    auto types = kg.types_of(*rsym);
    if (types.empty()) continue;
    std::vector<std::string> tokens = tokenize_sentence(fields[1]);
    for (const HearstMatch& m : extract_hearst_matches(tokens)) {
      if (!resource_lex.has_phrase(*rsym, join(m.subject))) continue;
      for (Symbol t : types) {
        for (const std::string& word : m.object) store.add(t, word, 1);
      }
    }
  }
  if (unknown_resources > 0) {
    log_warn(std::to_string(unknown_resources) +
             " article rows for resources absent from the knowledge graph skipped");
  }
  return store;
}

}  // namespace axmine
