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

#include "oracle.hpp"

#include <algorithm>
#include <sstream>

namespace axtest::oracle {

namespace {

const std::string kTypeProp = std::string(axmine::kRdfTypeIri);

// Local string helpers; the oracle does not reuse the production text
// utilities.
std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> words_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string norm_phrase(const std::string& s) { return lower(join_tokens(words_of(s))); }

bool has_triple(const Dataset& d, const std::string& s, const std::string& p,
                const RawObject& o) {
  if (p == kTypeProp) {
    if (o.is_literal) return false;
    for (const auto& [r, t] : d.types) {
      if (r == s && t == o.value) return true;
    }
  }
  for (const RawTriple& t : d.facts) {
    if (t.subject == s && t.property == p && t.object == o) return true;
  }
  return false;
}

std::vector<std::string> types_of(const Dataset& d, const std::string& r) {
  std::set<std::string> out;
  for (const auto& [subject, type] : d.types) {
    if (subject == r) out.insert(type);
  }
  return {out.begin(), out.end()};
}

// Transitive superclasses, universal root and the type itself excluded.
std::set<std::string> superclasses(const Dataset& d, const std::string& t) {
  std::set<std::string> out;
  std::vector<std::string> frontier{t};
  while (!frontier.empty()) {
    std::string cur = frontier.back();
    frontier.pop_back();
    for (const auto& [sub, super] : d.subclass) {
      if (sub != cur) continue;
      if (super == d.universal_type || super == t) continue;
      if (out.insert(super).second) frontier.push_back(super);
    }
  }
  out.erase(t);
  return out;
}

bool are_disjoint(const Dataset& d, const std::string& t1, const std::string& t2) {
  std::set<std::string> a1 = superclasses(d, t1);
  a1.insert(t1);
  std::set<std::string> a2 = superclasses(d, t2);
  a2.insert(t2);
  for (const auto& [x, y] : d.disjoint) {
    if ((a1.contains(x) && a2.contains(y)) || (a1.contains(y) && a2.contains(x))) {
      return true;
    }
  }
  return false;
}

std::set<std::string> functional_properties(const Dataset& d) {
  // Distinct (s, p, o) triples, type assertions included.
  std::set<std::tuple<std::string, std::string, RawObject>> distinct;
  for (const RawTriple& t : d.facts) distinct.insert({t.subject, t.property, t.object});
  for (const auto& [r, t] : d.types) distinct.insert({r, kTypeProp, res(t)});

  std::map<std::string, std::map<std::string, int>> values_per_subject;  // p -> s -> n
  for (const auto& [s, p, o] : distinct) values_per_subject[p][s] += 1;
  std::set<std::string> out;
  for (const auto& [p, subjects] : values_per_subject) {
    uint64_t any = subjects.size(), multi = 0;
    for (const auto& [s, n] : subjects) {
      if (n >= 2) ++multi;
    }
    if (static_cast<double>(multi) / static_cast<double>(any) < d.functional_threshold) {
      out.insert(p);
    }
  }
  return out;
}

double median_of(std::vector<double> scores, size_t n) {
  scores.resize(n, 0.0);
  std::sort(scores.begin(), scores.end());
  if (n % 2 == 1) return scores[n / 2];
  return (scores[n / 2 - 1] + scores[n / 2]) / 2.0;
}

double mean_of(const std::vector<double>& scores, size_t n) {
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(n);
}

std::optional<std::pair<std::string, double>> select_best(
    const std::map<std::string, std::vector<double>>& scores, size_t n) {
  std::optional<std::pair<std::string, double>> best;
  double best_mean = 0.0;
  for (const auto& [implication, values] : scores) {
    double med = median_of(values, n);
    if (med <= 0.0) continue;
    double mean = mean_of(values, n);
    bool better = false;
    if (!best) {
      better = true;
    } else if (med != best->second) {
      better = med > best->second;
    } else if (mean != best_mean) {
      better = mean > best_mean;
    }  // equal: keep the lexicographically smaller (seen first in the map)
    if (better) {
      best = {implication, med};
      best_mean = mean;
    }
  }
  return best;
}

std::string value_key(const RawObject& o) {
  if (!o.is_literal) return o.value;
  std::string out = "\"" + o.value;
  if (!o.datatype.empty()) out += "\"" + o.datatype;
  return out;
}

std::optional<std::vector<std::string>> match_pattern(
    const std::vector<std::string>& tokens, const std::vector<std::string>& prefix,
    const std::vector<std::string>& postfix) {
  if (prefix.empty() && postfix.empty()) return std::nullopt;
  if (tokens.size() <= prefix.size() + postfix.size()) return std::nullopt;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (lower(tokens[i]) != prefix[i]) return std::nullopt;
  }
  for (size_t i = 0; i < postfix.size(); ++i) {
    if (lower(tokens[tokens.size() - postfix.size() + i]) != postfix[i]) {
      return std::nullopt;
    }
  }
  std::vector<std::string> variable;
  for (size_t i = prefix.size(); i < tokens.size() - postfix.size(); ++i) {
    variable.push_back(lower(tokens[i]));
  }
  return variable;
}

}  // namespace

double freq(const Dataset& d, const std::vector<std::string>& members,
            const std::string& property, const RawObject& value) {
  size_t hits = 0;
  for (const std::string& r : members) {
    if (has_triple(d, r, property, value)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(members.size());
}

double lex_score_phrase(const Dataset& d, const std::string& entity,
                        const std::string& phrase) {
  std::string key = norm_phrase(phrase);
  uint64_t num = 0, den = 0;
  std::map<std::string, uint64_t> owner_counts;
  for (const auto& [e, p, count] : d.resource_lex) {
    if (count < 1) continue;  // loader skips non-positive counts
    if (norm_phrase(p) == key) owner_counts[e] += static_cast<uint64_t>(count);
  }
  for (const auto& [e, count] : owner_counts) {
    den += count;
    if (e == entity) num += count;
  }
  if (den == 0) return 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

double lex_score_words(const Dataset& d, const std::string& entity,
                       const std::string& phrase) {
  uint64_t num = 0, den = 0;
  for (const std::string& word : words_of(norm_phrase(phrase))) {
    for (const auto& [t, w, count] : d.type_word_lex) {
      if (count < 1) continue;
      if (norm_phrase(w) != word) continue;
      den += static_cast<uint64_t>(count);
      if (t == entity) num += static_cast<uint64_t>(count);
    }
  }
  if (den == 0) return 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

double score_rel(const Dataset& d, const std::vector<std::string>& members,
                 const std::string& cvar, const std::string& property,
                 const RawObject& value) {
  double lex = value.is_literal ? (lower(value.value) == cvar ? 1.0 : 0.0)
                                : lex_score_phrase(d, value.value, cvar);
  if (lex == 0.0) return 0.0;
  return freq(d, members, property, value) * lex;
}

double score_type(const Dataset& d, const std::vector<std::string>& members,
                  const std::string& cfix, const std::string& type) {
  double lex = lex_score_words(d, type, cfix);
  if (lex == 0.0) return 0.0;
  return freq(d, members, kTypeProp, res(type)) * lex;
}

std::optional<std::pair<std::string, double>> best_property(
    const Dataset& d, const std::map<std::string, Category>& categories,
    const Set& set) {
  const size_t n = set.members.size();
  if (n == 0) return std::nullopt;
  std::map<std::string, std::vector<double>> scores;
  for (const auto& [cat, cvar] : set.members) {
    const Category& c = categories.at(cat);
    if (c.resources.empty()) continue;
    std::set<std::pair<std::string, RawObject>> pairs;
    for (const RawTriple& t : d.facts) {
      if (t.property == kTypeProp) continue;
      for (const std::string& r : c.resources) {
        if (t.subject == r) pairs.insert({t.property, t.object});
      }
    }
    std::map<std::string, double> best;
    for (const auto& [p, v] : pairs) {
      double s = score_rel(d, c.resources, cvar, p, v);
      auto [it, inserted] = best.try_emplace(p, s);
      if (!inserted && s > it->second) it->second = s;
    }
    for (const auto& [p, s] : best) scores[p].push_back(s);
  }
  return select_best(scores, n);
}

std::optional<std::pair<std::string, double>> best_type(
    const Dataset& d, const std::map<std::string, Category>& categories,
    const Set& set) {
  const size_t n = set.members.size();
  if (n == 0) return std::nullopt;
  std::string cfix = lower(join_tokens(set.prefix) +
                           (set.prefix.empty() || set.postfix.empty() ? "" : " ") +
                           join_tokens(set.postfix));
  std::map<std::string, std::vector<double>> scores;
  for (const auto& [cat, unused] : set.members) {
    const Category& c = categories.at(cat);
    if (c.resources.empty()) continue;
    std::set<std::string> candidate_types;
    for (const std::string& r : c.resources) {
      for (const std::string& t : types_of(d, r)) candidate_types.insert(t);
    }
    for (const std::string& t : candidate_types) {
      scores[t].push_back(score_type(d, c.resources, cfix, t));
    }
  }
  return select_best(scores, n);
}

std::vector<PatternEntry> mine(const Dataset& d,
                               const std::map<std::string, Category>& categories,
                               const std::vector<Set>& sets) {
  std::map<std::tuple<std::vector<std::string>, std::vector<std::string>, bool,
                      std::string>,
           uint64_t>
      supports;
  for (const Set& set : sets) {
    std::vector<std::string> prefix, postfix;
    for (const std::string& t : set.prefix) prefix.push_back(lower(t));
    for (const std::string& t : set.postfix) postfix.push_back(lower(t));
    if (auto best = best_property(d, categories, set)) {
      supports[{prefix, postfix, false, best->first}] += set.members.size();
    }
    if (auto best = best_type(d, categories, set)) {
      supports[{prefix, postfix, true, best->first}] += set.members.size();
    }
  }
  std::vector<PatternEntry> out;
  for (const auto& [key, support] : supports) {
    const auto& [prefix, postfix, is_type, implication] = key;
    out.push_back(PatternEntry{prefix, postfix, is_type, implication, support});
  }
  return out;
}

double pattern_confidence(const std::vector<PatternEntry>& patterns,
                          const PatternEntry& entry) {
  uint64_t total = 0;
  for (const PatternEntry& p : patterns) {
    if (p.prefix == entry.prefix && p.postfix == entry.postfix &&
        p.is_type == entry.is_type) {
      total += p.support;
    }
  }
  if (total == 0) return 0.0;
  return static_cast<double>(entry.support) / static_cast<double>(total);
}

std::vector<Axiom> axioms_for_category(const Dataset& d,
                                       const std::vector<PatternEntry>& patterns,
                                       const Category& category, double tau) {
  std::vector<Axiom> out;
  if (category.resources.empty()) return out;

  struct RelCand {
    std::string property;
    RawObject value;
    double confidence;
  };
  std::vector<RelCand> rel_candidates;
  std::map<std::string, double> type_candidates;

  for (const PatternEntry& p : patterns) {
    auto variable = match_pattern(category.tokens, p.prefix, p.postfix);
    if (!variable) continue;
    std::string cvar = join_tokens(*variable);
    double pconf = pattern_confidence(patterns, p);
    if (!p.is_type) {
      std::set<RawObject> values;
      for (const RawTriple& t : d.facts) {
        if (t.property != p.implication) continue;
        for (const std::string& r : category.resources) {
          if (t.subject == r) values.insert(t.object);
        }
      }
      for (const RawObject& v : values) {
        double conf = pconf * score_rel(d, category.resources, cvar, p.implication, v);
        if (conf > tau) rel_candidates.push_back({p.implication, v, conf});
      }
    } else {
      std::string cfix = lower(join_tokens(p.prefix) +
                               (p.prefix.empty() || p.postfix.empty() ? "" : " ") +
                               join_tokens(p.postfix));
      double conf = pconf * score_type(d, category.resources, cfix, p.implication);
      if (conf > tau) {
        auto [it, inserted] = type_candidates.try_emplace(p.implication, conf);
        if (!inserted && conf > it->second) it->second = conf;
      }
    }
  }

  std::map<std::string, RelCand> best_per_property;
  for (const RelCand& c : rel_candidates) {
    auto [it, inserted] = best_per_property.try_emplace(c.property, c);
    if (inserted) continue;
    if (c.confidence > it->second.confidence ||
        (c.confidence == it->second.confidence &&
         value_key(c.value) < value_key(it->second.value))) {
      it->second = c;
    }
  }
  for (const auto& [p, c] : best_per_property) {
    out.push_back(Axiom{category.id, false, p, c.value, c.confidence});
  }

  std::vector<std::pair<std::string, double>> ranked(type_candidates.begin(),
                                                     type_candidates.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> accepted;
  for (size_t i = 0; i < ranked.size(); ++i) {
    bool accept = i == 0;
    if (!accept) {
      std::set<std::string> supers = superclasses(d, ranked[i].first);
      for (const std::string& a : accepted) {
        if (supers.contains(a)) {
          accept = true;
          break;
        }
      }
    }
    if (accept) {
      accepted.push_back(ranked[i].first);
      out.push_back(Axiom{category.id, true, ranked[i].first, RawObject{}, ranked[i].second});
    }
  }
  return out;
}

Result run(const Dataset& d, const std::map<std::string, Category>& categories,
           const std::vector<Set>& sets, double tau) {
  Result result;
  result.patterns = mine(d, categories, sets);
  for (const auto& [id, category] : categories) {
    auto axioms = axioms_for_category(d, result.patterns, category, tau);
    result.axioms.insert(result.axioms.end(), axioms.begin(), axioms.end());
  }

  // Generation with cross-axiom deduplication on the fact itself; the
  // higher-confidence (earlier on ties) axiom keeps the provenance.
  struct Generated {
    std::string subject, property;
    RawObject object;
    bool is_type;
    size_t axiom;
    std::string status;
  };
  std::vector<Generated> generated;
  std::map<std::tuple<std::string, std::string, RawObject>, size_t> dedup;

  auto emit = [&](const std::string& s, const std::string& p, const RawObject& o,
                  bool is_type, size_t axiom_idx, const std::string& status) {
    auto key = std::make_tuple(s, p, o);
    auto it = dedup.find(key);
    if (it == dedup.end()) {
      dedup.emplace(key, generated.size());
      generated.push_back(Generated{s, p, o, is_type, axiom_idx, status});
      return;
    }
    Generated& g = generated[it->second];
    const Axiom& incumbent = result.axioms[g.axiom];
    const Axiom& challenger = result.axioms[axiom_idx];
    if (challenger.confidence > incumbent.confidence ||
        (challenger.confidence == incumbent.confidence && axiom_idx < g.axiom)) {
      g.axiom = axiom_idx;
    }
  };

  for (size_t i = 0; i < result.axioms.size(); ++i) {
    const Axiom& a = result.axioms[i];
    const Category& c = categories.at(a.category);
    if (!a.is_type) {
      for (const std::string& r : c.resources) {
        bool exists = has_triple(d, r, a.implication, a.value);
        emit(r, a.implication, a.value, false, i, exists ? "pre-existing" : "novel");
      }
    } else {
      std::vector<std::string> expansion{a.implication};
      for (const std::string& s : superclasses(d, a.implication)) expansion.push_back(s);
      std::sort(expansion.begin() + 1, expansion.end());
      for (const std::string& r : c.resources) {
        std::vector<std::string> existing = types_of(d, r);
        for (const std::string& t : expansion) {
          bool exists =
              std::find(existing.begin(), existing.end(), t) != existing.end();
          emit(r, kTypeProp, res(t), true, i, exists ? "pre-existing" : "novel");
        }
      }
    }
  }

  // Functional post-filter.
  std::set<std::string> functional = functional_properties(d);
  std::map<std::pair<std::string, std::string>, std::vector<size_t>> rel_groups;
  for (size_t i = 0; i < generated.size(); ++i) {
    const Generated& g = generated[i];
    if (g.is_type || g.status != "novel") continue;
    if (!functional.contains(g.property)) continue;
    rel_groups[{g.subject, g.property}].push_back(i);
  }
  for (auto& [key, indices] : rel_groups) {
    bool has_existing = false;
    for (const RawTriple& t : d.facts) {
      if (t.subject == key.first && t.property == key.second) has_existing = true;
    }
    if (key.second == kTypeProp) {
      for (const auto& [r, unused] : d.types) {
        if (r == key.first) has_existing = true;
      }
    }
    if (has_existing) {
      for (size_t i : indices) generated[i].status = "functional-conflict";
      continue;
    }
    std::sort(indices.begin(), indices.end(), [&](size_t x, size_t y) {
      const Axiom& ax = result.axioms[generated[x].axiom];
      const Axiom& ay = result.axioms[generated[y].axiom];
      if (ax.confidence != ay.confidence) return ax.confidence > ay.confidence;
      if (generated[x].axiom != generated[y].axiom) {
        return generated[x].axiom < generated[y].axiom;
      }
      return x < y;
    });
    for (size_t k = 1; k < indices.size(); ++k) {
      generated[indices[k]].status = "functional-conflict";
    }
  }

  // Disjointness post-filter.
  std::map<std::string, std::vector<size_t>> type_groups;
  for (size_t i = 0; i < generated.size(); ++i) {
    const Generated& g = generated[i];
    if (!g.is_type || g.status != "novel") continue;
    type_groups[g.subject].push_back(i);
  }
  for (auto& [subject, indices] : type_groups) {
    std::sort(indices.begin(), indices.end(), [&](size_t x, size_t y) {
      const Axiom& ax = result.axioms[generated[x].axiom];
      const Axiom& ay = result.axioms[generated[y].axiom];
      if (ax.confidence != ay.confidence) return ax.confidence > ay.confidence;
      if (generated[x].axiom != generated[y].axiom) {
        return generated[x].axiom < generated[y].axiom;
      }
      return x < y;
    });
    std::vector<std::string> existing = types_of(d, subject);
    std::vector<std::string> accepted;
    for (size_t i : indices) {
      const std::string& t = generated[i].object.value;
      bool conflict = false;
      for (const std::string& e : existing) {
        if (are_disjoint(d, t, e)) conflict = true;
      }
      for (const std::string& a : accepted) {
        if (conflict) break;
        if (are_disjoint(d, t, a)) conflict = true;
      }
      if (conflict) {
        generated[i].status = "disjointness-conflict";
      } else {
        accepted.push_back(t);
      }
    }
  }

  for (const Generated& g : generated) {
    result.assertions.push_back(Assertion{g.subject, g.property, g.object, g.status});
  }
  return result;
}

}  // namespace axtest::oracle
