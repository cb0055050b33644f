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

#include "pattern_mining.hpp"

#include <algorithm>
#include <cstdlib>

#include "log.hpp"
#include "text.hpp"

namespace axmine {

namespace {

std::vector<std::string> lowered(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(to_lower(t));
  return out;
}

// Median over the scores padded with zeros up to member count; even
// cardinality takes the mean of the two central values.
double median_padded(std::vector<double> scores, size_t n) {
  scores.resize(n, 0.0);
  std::sort(scores.begin(), scores.end());
  if (n % 2 == 1) return scores[n / 2];
  return (scores[n / 2 - 1] + scores[n / 2]) / 2.0;
}

double mean_padded(const std::vector<double>& scores, size_t n) {
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(n);
}

// Argmax over per-implication score vectors: highest median, ties broken by
// higher mean, then lexicographically smaller id.
std::optional<MinedPattern> select_best(
    const ScoringContext& ctx,
    const std::map<Symbol, std::vector<double>>& scores_by_implication, size_t n) {
  std::optional<MinedPattern> best;
  double best_mean = 0.0;
  for (const auto& [implication, scores] : scores_by_implication) {
    double med = median_padded(scores, n);
    if (med <= 0.0) continue;
    double mean = mean_padded(scores, n);
    bool better = false;
    if (!best) {
      better = true;
    } else if (med != best->median) {
      better = med > best->median;
    } else if (mean != best_mean) {
      better = mean > best_mean;
    } else {
      better = ctx.syms.less(implication, best->implication);
    }
    if (better) {
      best = MinedPattern{implication, med, n};
      best_mean = mean;
    }
  }
  return best;
}

}  // namespace

std::string_view pattern_kind_name(PatternKind kind) {
  return kind == PatternKind::kProperty ? "property" : "type";
}

double lex_match_value(const ScoringContext& ctx, const ObjectRef& value,
                       const std::string& variable_phrase) {
  if (value.kind == ObjKind::kLiteral) {
    return to_lower(ctx.syms.at(value.lex)) == variable_phrase ? 1.0 : 0.0;
  }
  return ctx.resource_lex.score(value.lex, variable_phrase);
}

double score_rel(const ScoringContext& ctx, Symbol category,
                 const std::string& variable_phrase, Symbol property,
                 const ObjectRef& value) {
  double lex = lex_match_value(ctx, value, variable_phrase);
  if (lex == 0.0) return 0.0;
  return ctx.kg.freq(ctx.graph.resources(category), property, value) * lex;
}

double score_type(const ScoringContext& ctx, Symbol category,
                  const std::string& shared_phrase, Symbol type) {
  double lex = ctx.type_lex.score(type, shared_phrase);
  if (lex == 0.0) return 0.0;
  ObjectRef value{ObjKind::kResource, type, kNoSymbol};
  return ctx.kg.freq(ctx.graph.resources(category), ctx.kg.type_property(), value) * lex;
}

PatternRegistry::PatternRegistry(SymbolTable& syms) : syms_(&syms) {}

void PatternRegistry::register_pattern(const TextualPattern& textual,
                                       PatternKind kind, Symbol implication,
                                       uint64_t support_increment) {
  if (support_increment == 0) return;
  PerTextual& pt = patterns_[textual];
  if (kind == PatternKind::kProperty) {
    pt.props[implication] += support_increment;
    pt.prop_total += support_increment;
  } else {
    pt.types[implication] += support_increment;
    pt.type_total += support_increment;
  }
}

uint64_t PatternRegistry::support(const TextualPattern& textual, PatternKind kind,
                                  Symbol implication) const {
  auto it = patterns_.find(textual);
  if (it == patterns_.end()) return 0;
  const auto& m = kind == PatternKind::kProperty ? it->second.props : it->second.types;
  auto jt = m.find(implication);
  return jt == m.end() ? 0 : jt->second;
}

double PatternRegistry::confidence(const TextualPattern& textual, PatternKind kind,
                                   Symbol implication) const {
  auto it = patterns_.find(textual);
  if (it == patterns_.end()) return 0.0;
  uint64_t total = kind == PatternKind::kProperty ? it->second.prop_total
                                                  : it->second.type_total;
  if (total == 0) return 0.0;
  return static_cast<double>(support(textual, kind, implication)) /
         static_cast<double>(total);
}

std::vector<PatternRegistry::Entry> PatternRegistry::entries() const {
  std::vector<Entry> out;
  for (const auto& [textual, pt] : patterns_) {
    auto push = [&](const std::map<Symbol, uint64_t>& m, PatternKind kind) {
      std::vector<Symbol> keys;
      for (const auto& [impl, unused] : m) keys.push_back(impl);
      std::sort(keys.begin(), keys.end(),
                [this](Symbol a, Symbol b) { return syms_->less(a, b); });
      for (Symbol impl : keys) out.push_back(Entry{textual, kind, impl, m.at(impl)});
    };
    push(pt.props, PatternKind::kProperty);
    push(pt.types, PatternKind::kType);
  }
  return out;
}

const std::map<Symbol, uint64_t>* PatternRegistry::implications(
    const TextualPattern& textual, PatternKind kind) const {
  auto it = patterns_.find(textual);
  if (it == patterns_.end()) return nullptr;
  return kind == PatternKind::kProperty ? &it->second.props : &it->second.types;
}

std::vector<TextualPattern> PatternRegistry::textuals() const {
  std::vector<TextualPattern> out;
  out.reserve(patterns_.size());
  for (const auto& [textual, unused] : patterns_) out.push_back(textual);
  return out;
}

size_t PatternRegistry::size() const {
  size_t n = 0;
  for (const auto& [textual, pt] : patterns_) n += pt.props.size() + pt.types.size();
  return n;
}

void PatternRegistry::write_tsv(std::ostream& out) const {
  for (const Entry& e : entries()) {
    out << join(e.textual.prefix) << '\t' << join(e.textual.postfix) << '\t'
        << pattern_kind_name(e.kind) << '\t' << syms_->at(e.implication) << '\t'
        << e.support << '\n';
  }
}

PatternRegistry PatternRegistry::read_tsv(std::istream& in, SymbolTable& syms) {
  PatternRegistry registry(syms);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 5) {
      log_warn("pattern row with " + std::to_string(fields.size()) + " fields skipped");
      continue;
    }
    TextualPattern textual{split_ws(fields[0]), split_ws(fields[1])};
    PatternKind kind =
        fields[2] == "property" ? PatternKind::kProperty : PatternKind::kType;
    uint64_t support = std::strtoull(fields[4].c_str(), nullptr, 10);
    registry.register_pattern(textual, kind, syms.intern(fields[3]), support);
  }
  return registry;
}

std::optional<MinedPattern> mine_property_pattern(const ScoringContext& ctx,
                                                  const CandidateSet& set) {
  const size_t n = set.members.size();
  if (n == 0) return std::nullopt;
  std::map<Symbol, std::vector<double>> scores_by_property;
  for (const CandidateMember& member : set.members) {
    auto members = ctx.graph.resources(member.category);
    if (members.empty()) continue;  // contributes zero everywhere
    std::string cvar = to_lower(join(member.variable));
    // Distinct (p, v) pairs held by this category's resources; each
    // category keeps its best value per property.
    std::map<Symbol, double> best;
    std::map<std::pair<Symbol, ObjectRef>, bool> seen;
    for (Symbol r : members) {
      for (const auto& [p, v] : ctx.kg.facts_of(r)) {
        if (p == ctx.kg.type_property()) continue;
        auto key = std::make_pair(p, v);
        if (seen.contains(key)) continue;
        seen[key] = true;
        double s = score_rel(ctx, member.category, cvar, p, v);
        auto [it, inserted] = best.try_emplace(p, s);
        if (!inserted && s > it->second) it->second = s;
      }
    }
    for (const auto& [p, s] : best) scores_by_property[p].push_back(s);
  }
  return select_best(ctx, scores_by_property, n);
}

std::optional<MinedPattern> mine_type_pattern(const ScoringContext& ctx,
                                              const CandidateSet& set) {
  const size_t n = set.members.size();
  if (n == 0) return std::nullopt;
  std::string cfix = set.shared_phrase_lower();
  std::map<Symbol, std::vector<double>> scores_by_type;
  for (const CandidateMember& member : set.members) {
    auto members = ctx.graph.resources(member.category);
    if (members.empty()) continue;
    std::map<Symbol, bool> seen;
    for (Symbol r : members) {
      for (Symbol t : ctx.kg.types_of(r)) {
        if (seen.contains(t)) continue;
        seen[t] = true;
        scores_by_type[t].push_back(score_type(ctx, member.category, cfix, t));
      }
    }
  }
  return select_best(ctx, scores_by_type, n);
}

TextualPattern textual_of(const CandidateSet& set) {
  return TextualPattern{lowered(set.prefix), lowered(set.postfix)};
}

PatternRegistry mine_patterns(const ScoringContext& ctx,
                              const std::vector<CandidateSet>& sets,
                              SymbolTable& syms) {
  PatternRegistry registry(syms);
  for (const CandidateSet& set : sets) {
    TextualPattern textual = textual_of(set);
    if (auto mined = mine_property_pattern(ctx, set)) {
      registry.register_pattern(textual, PatternKind::kProperty, mined->implication,
                                mined->support_increment);
    }
    if (auto mined = mine_type_pattern(ctx, set)) {
      registry.register_pattern(textual, PatternKind::kType, mined->implication,
                                mined->support_increment);
    }
  }
  return registry;
}

}  // namespace axmine
