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

#ifndef AXMINE_LEXICALISATION_HPP_
#define AXMINE_LEXICALISATION_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kg_store.hpp"
#include "symbol_table.hpp"

namespace axmine {

// Counts of surface phrases per entity, plus the inverse phrase -> entities
// index. Phrase granularity (resources) scores whole phrases; word
// granularity (types) stores single words and scores a phrase by summing
// the counts of its words into one combined numerator and denominator.
enum class LexGranularity { kPhrase, kWord };

class LexStore {
 public:
  LexStore(SymbolTable& syms, LexGranularity granularity);

  // `resource<TAB>phrase<TAB>count` rows; phrases are lowercased and
  // whitespace-normalised, duplicate rows accumulate, counts < 1 are
  // skipped and logged.
  static LexStore load_tsv(std::istream& in, SymbolTable& syms,
                           LexGranularity granularity);

  void add(std::string_view entity, std::string_view phrase, uint64_t count);
  void add(Symbol entity, std::string_view phrase, uint64_t count);

  // Probability that `phrase` refers to `entity` among all entities sharing
  // it; 0 for unknown phrases. Total function.
  double score(Symbol entity, std::string_view phrase) const;

  bool has_phrase(Symbol entity, std::string_view phrase) const;
  std::vector<std::string> phrases() const;  // sorted, for tests/dumps
  std::vector<std::pair<Symbol, uint64_t>> owners(std::string_view phrase) const;
  LexGranularity granularity() const { return granularity_; }
  size_t entry_count() const;

  // `entity<TAB>phrase<TAB>count` rows, sorted by entity then phrase.
  void write_tsv(std::ostream& out) const;

 private:
  struct PhraseEntry {
    std::unordered_map<Symbol, uint64_t> owner_counts;
    uint64_t total = 0;
  };

  const PhraseEntry* entry(std::string_view key) const;

  SymbolTable* syms_;
  LexGranularity granularity_;
  std::unordered_map<std::string, PhraseEntry> by_phrase_;
  std::unordered_map<Symbol, std::unordered_set<std::string>> by_entity_;
};

// One fired hypernym rule: subject and object noun chunks plus the rule id.
struct HearstMatch {
  std::vector<std::string> subject;
  std::vector<std::string> object;
  std::string_view rule;
};

// Fixed rule set over a lowercased token sequence (see tokenize_sentence):
//   "X is|was a|an Y", "X is|was the Y", "Y such as X", "X and other Y",
//   "X , a|an Y".
// X and Y are maximal chunks of consecutive tokens bounded by a fixed
// function-word list; matches with an empty chunk are dropped.
std::vector<HearstMatch> extract_hearst_matches(std::span<const std::string> tokens);

// Builds the word-granular type store: for each article sentence of a
// resource r known to the graph, every hypernym match whose subject phrase
// is a lexicalisation of r credits each word of the object phrase to each
// direct type of r. Articles arrive as `resource<TAB>sentence` rows.
LexStore build_type_lexicalisations(const KgIndex& kg, const LexStore& resource_lex,
                                    std::istream& articles, SymbolTable& syms);

}  // namespace axmine

#endif  // AXMINE_LEXICALISATION_HPP_
