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

#include "pattern_application.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "text.hpp"

namespace axmine {

namespace {

// Object string form used only as the final determinism tie-break.
std::string value_key(const ScoringContext& ctx, const ObjectRef& v) {
  std::string out(ctx.syms.at(v.lex));
  if (v.kind == ObjKind::kLiteral) {
    out.insert(0, "\"");
    if (v.datatype != kNoSymbol) out += "\"" + std::string(ctx.syms.at(v.datatype));
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::string>> match_textual(
    const std::vector<std::string>& category_tokens, const TextualPattern& textual) {
  const size_t np = textual.prefix.size();
  const size_t ns = textual.postfix.size();
  if (np + ns == 0) return std::nullopt;
  if (category_tokens.size() <= np + ns) return std::nullopt;
  for (size_t i = 0; i < np; ++i) {
    if (to_lower(category_tokens[i]) != textual.prefix[i]) return std::nullopt;
  }
  for (size_t i = 0; i < ns; ++i) {
    if (to_lower(category_tokens[category_tokens.size() - ns + i]) != textual.postfix[i]) {
      return std::nullopt;
    }
  }
  std::vector<std::string> variable;
  for (size_t i = np; i < category_tokens.size() - ns; ++i) {
    variable.push_back(to_lower(category_tokens[i]));
  }
  return variable;
}

std::vector<Axiom> axioms_for_category(const ScoringContext& ctx,
                                       const PatternRegistry& registry,
                                       Symbol category, double tau) {
  std::vector<Axiom> out;
  auto members = ctx.graph.resources(category);
  if (members.empty()) return out;  // no evidence without resources
  const std::vector<std::string>& tokens = ctx.graph.tokens(category);

  struct RelationCandidate {
    Symbol property;
    ObjectRef value;
    double confidence;
  };
  std::vector<RelationCandidate> relation_candidates;
  std::map<Symbol, double> type_candidates;  // best confidence per type

  for (const TextualPattern& textual : registry.textuals()) {
    auto variable = match_textual(tokens, textual);
    if (!variable) continue;
    std::string cvar = join(*variable);

    if (const auto* props = registry.implications(textual, PatternKind::kProperty)) {
      for (const auto& [property, unused] : *props) {
        double pconf = registry.confidence(textual, PatternKind::kProperty, property);
        // Candidate values: the property's values among the category's facts.
        std::set<ObjectRef> values;
        for (Symbol r : members) {
          for (const auto& [p, v] : ctx.kg.facts_of(r)) {
            if (p == property) values.insert(v);
          }
        }
        for (const ObjectRef& v : values) {
          double conf = pconf * score_rel(ctx, category, cvar, property, v);
          if (conf > tau) relation_candidates.push_back({property, v, conf});
        }
      }
    }
    if (const auto* types = registry.implications(textual, PatternKind::kType)) {
      std::string cfix = to_lower(join(textual.prefix) +
                                  (textual.prefix.empty() || textual.postfix.empty()
                                       ? ""
                                       : " ") +
                                  join(textual.postfix));
      for (const auto& [type, unused] : *types) {
        double pconf = registry.confidence(textual, PatternKind::kType, type);
        double conf = pconf * score_type(ctx, category, cfix, type);
        if (conf > tau) {
          auto [it, inserted] = type_candidates.try_emplace(type, conf);
          if (!inserted && conf > it->second) it->second = conf;
        }
      }
    }
  }

  // Relations: one axiom per property, the best-scoring value wins; ties go
  // to the lexicographically smaller value.
  std::map<Symbol, RelationCandidate> best_per_property;
  for (const RelationCandidate& c : relation_candidates) {
    auto [it, inserted] = best_per_property.try_emplace(c.property, c);
    if (inserted) continue;
    const RelationCandidate& cur = it->second;
    if (c.confidence > cur.confidence ||
        (c.confidence == cur.confidence &&
         value_key(ctx, c.value) < value_key(ctx, cur.value))) {
      it->second = c;
    }
  }
  std::vector<Symbol> properties;
  for (const auto& [p, unused] : best_per_property) properties.push_back(p);
  std::sort(properties.begin(), properties.end(),
            [&](Symbol a, Symbol b) { return ctx.syms.less(a, b); });
  for (Symbol p : properties) {
    const RelationCandidate& c = best_per_property.at(p);
    out.push_back(Axiom{category, PatternKind::kProperty, p, c.value, c.confidence});
  }

  // Types: the top candidate is accepted, then lower-confidence candidates
  // whose type specialises an already accepted type, in descending order.
  std::vector<std::pair<Symbol, double>> ranked(type_candidates.begin(),
                                                type_candidates.end());
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return ctx.syms.less(a.first, b.first);
  });
  std::vector<Symbol> accepted;
  for (size_t i = 0; i < ranked.size(); ++i) {
    const auto& [type, conf] = ranked[i];
    bool accept = false;
    if (i == 0) {
      accept = true;
    } else {
      auto closure = ctx.ontology.superclass_closure(type);
      for (Symbol a : accepted) {
        if (std::binary_search(closure.begin(), closure.end(), a)) {
          accept = true;
          break;
        }
      }
    }
    if (accept) {
      accepted.push_back(type);
      out.push_back(Axiom{category, PatternKind::kType, type, ObjectRef{}, conf});
    }
  }
  return out;
}

std::vector<Axiom> apply_patterns(const ScoringContext& ctx,
                                  const PatternRegistry& registry, double tau) {
  std::vector<Axiom> out;
  for (Symbol category : ctx.graph.categories()) {
    std::vector<Axiom> axioms = axioms_for_category(ctx, registry, category, tau);
    out.insert(out.end(), axioms.begin(), axioms.end());
  }
  return out;
}

}  // namespace axmine
