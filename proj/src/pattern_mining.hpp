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

#ifndef AXMINE_PATTERN_MINING_HPP_
#define AXMINE_PATTERN_MINING_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "candidate_selection.hpp"
#include "category_graph.hpp"
#include "kg_store.hpp"
#include "lexicalisation.hpp"
#include "symbol_table.hpp"

namespace axmine {

// Shared part of category names, lowercased; equality is token-exact.
struct TextualPattern {
  std::vector<std::string> prefix;
  std::vector<std::string> postfix;

  auto operator<=>(const TextualPattern&) const = default;
};

enum class PatternKind { kProperty, kType };

std::string_view pattern_kind_name(PatternKind kind);

// Everything the scorers need; all references are to immutable loaded
// state, so scoring is pure.
struct ScoringContext {
  const SymbolTable& syms;
  const KgIndex& kg;
  const CategoryGraph& graph;
  const OntologyIndex& ontology;
  const LexStore& resource_lex;  // phrase granularity
  const LexStore& type_lex;      // word granularity
};

// Lexical factor of a relation score: lexicalisation score for resource
// values, exact lowercased string equality for literal values.
double lex_match_value(const ScoringContext& ctx, const ObjectRef& value,
                       const std::string& variable_phrase);

// freq(c, p, v) * lexical factor. The category must have resources.
double score_rel(const ScoringContext& ctx, Symbol category,
                 const std::string& variable_phrase, Symbol property,
                 const ObjectRef& value);

// freq(c, rdf:type, t) * word-level lexScore(t, shared phrase).
double score_type(const ScoringContext& ctx, Symbol category,
                  const std::string& shared_phrase, Symbol type);

// Support-accumulating registry of property and type patterns. Supports of
// identical (textual, kind, implication) entries add up; confidence of an
// entry normalises its support over all same-kind entries with the same
// textual pattern.
class PatternRegistry {
 public:
  explicit PatternRegistry(SymbolTable& syms);

  void register_pattern(const TextualPattern& textual, PatternKind kind,
                        Symbol implication, uint64_t support_increment);

  uint64_t support(const TextualPattern& textual, PatternKind kind,
                   Symbol implication) const;
  double confidence(const TextualPattern& textual, PatternKind kind,
                    Symbol implication) const;

  struct Entry {
    TextualPattern textual;
    PatternKind kind;
    Symbol implication;
    uint64_t support;
  };
  // Sorted by (textual, kind, implication string).
  std::vector<Entry> entries() const;

  const std::map<Symbol, uint64_t>* implications(const TextualPattern& textual,
                                                 PatternKind kind) const;
  std::vector<TextualPattern> textuals() const;
  size_t size() const;

  // `prefix<TAB>postfix<TAB>kind<TAB>implication<TAB>support`, affixes
  // space-joined.
  void write_tsv(std::ostream& out) const;
  static PatternRegistry read_tsv(std::istream& in, SymbolTable& syms);

 private:
  struct PerTextual {
    std::map<Symbol, uint64_t> props;
    std::map<Symbol, uint64_t> types;
    uint64_t prop_total = 0;
    uint64_t type_total = 0;
  };

  SymbolTable* syms_;
  std::map<TextualPattern, PerTextual> patterns_;
};

struct MinedPattern {
  Symbol implication = kNoSymbol;
  double median = 0.0;
  uint64_t support_increment = 0;
};

// Best property for the set by median of per-category scores, where each
// category's score for a property is the max over that property's values
// and categories lacking the property contribute zero. Returns nothing if
// the best median is zero. Ties: higher mean, then lexicographic id.
std::optional<MinedPattern> mine_property_pattern(const ScoringContext& ctx,
                                                  const CandidateSet& set);

// Same scheme over type scores, one score per (category, type).
std::optional<MinedPattern> mine_type_pattern(const ScoringContext& ctx,
                                              const CandidateSet& set);

// Full mining stage: mine every set and accumulate supports.
PatternRegistry mine_patterns(const ScoringContext& ctx,
                              const std::vector<CandidateSet>& sets,
                              SymbolTable& syms);

TextualPattern textual_of(const CandidateSet& set);

}  // namespace axmine

#endif  // AXMINE_PATTERN_MINING_HPP_
