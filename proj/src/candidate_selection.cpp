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

#include "candidate_selection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "text.hpp"

namespace axmine {

namespace {

using TokenSeq = std::vector<std::string>;

struct Group {
  bool postfix_mode = false;
  TokenSeq shared;
  std::vector<Symbol> members;
  size_t formation_size = 0;
};

// Greedy partition of the children by their longest shared affix: repeatedly
// pick the longest affix shared by at least two remaining children (ties:
// larger group, then lexicographically smaller affix) and split it off.
std::vector<Group> partition_by_affix(const CategoryGraph& graph,
                                      std::vector<Symbol> remaining,
                                      bool postfix_mode) {
  std::vector<Group> groups;
  while (remaining.size() >= 2) {
    std::map<TokenSeq, std::vector<Symbol>> buckets;
    for (Symbol c : remaining) {
      const TokenSeq& toks = graph.tokens(c);
      for (size_t len = 1; len < toks.size(); ++len) {
        TokenSeq affix = postfix_mode ? TokenSeq(toks.end() - len, toks.end())
                                      : TokenSeq(toks.begin(), toks.begin() + len);
        buckets[std::move(affix)].push_back(c);
      }
    }
    const TokenSeq* best_affix = nullptr;
    const std::vector<Symbol>* best_members = nullptr;
    for (const auto& [affix, members] : buckets) {
      if (members.size() < 2) continue;
      bool better = false;
      if (best_affix == nullptr) {
        better = true;
      } else if (affix.size() != best_affix->size()) {
        better = affix.size() > best_affix->size();
      } else if (members.size() != best_members->size()) {
        better = members.size() > best_members->size();
      }  // equal length and size: earlier (smaller) affix wins, map order
      if (better) {
        best_affix = &affix;
        best_members = &members;
      }
    }
    if (best_affix == nullptr) break;
    Group g;
    g.postfix_mode = postfix_mode;
    g.shared = *best_affix;
    g.members = *best_members;
    g.formation_size = g.members.size();
    for (Symbol c : g.members) std::erase(remaining, c);
    groups.push_back(std::move(g));
  }
  return groups;
}

// Longest token sequence shared at the given end by every sequence.
TokenSeq common_affix(const std::vector<TokenSeq>& seqs, bool postfix_mode) {
  if (seqs.empty()) return {};
  size_t limit = seqs[0].size();
  for (const TokenSeq& s : seqs) limit = std::min(limit, s.size());
  size_t len = 0;
  while (len < limit) {
    const std::string& probe = postfix_mode ? seqs[0][seqs[0].size() - 1 - len]
                                            : seqs[0][len];
    bool all = true;
    for (const TokenSeq& s : seqs) {
      const std::string& tok = postfix_mode ? s[s.size() - 1 - len] : s[len];
      if (tok != probe) {
        all = false;
        break;
      }
    }
    if (!all) break;
    ++len;
  }
  if (postfix_mode) return TokenSeq(seqs[0].end() - len, seqs[0].end());
  return TokenSeq(seqs[0].begin(), seqs[0].begin() + len);
}

// Turns a surviving group into a candidate set: strips the shared affix,
// adopts the complementary affix when all residues share one, and drops
// members whose variable part would become empty.
CandidateSet to_candidate_set(const CategoryGraph& graph, Symbol parent,
                              const Group& g) {
  CandidateSet set;
  set.parent = parent;
  std::vector<TokenSeq> residues;
  residues.reserve(g.members.size());
  for (Symbol c : g.members) {
    const TokenSeq& toks = graph.tokens(c);
    if (g.postfix_mode) {
      residues.emplace_back(toks.begin(), toks.end() - g.shared.size());
    } else {
      residues.emplace_back(toks.begin() + g.shared.size(), toks.end());
    }
  }
  TokenSeq extra = common_affix(residues, !g.postfix_mode);
  if (g.postfix_mode) {
    set.postfix = g.shared;
    set.prefix = extra;
  } else {
    set.prefix = g.shared;
    set.postfix = extra;
  }
  for (size_t i = 0; i < g.members.size(); ++i) {
    const TokenSeq& r = residues[i];
    if (r.size() <= extra.size()) continue;  // name equals the shared part
    CandidateMember m;
    m.category = g.members[i];
    if (g.postfix_mode) {
      m.variable = TokenSeq(r.begin() + extra.size(), r.end());
    } else {
      m.variable = TokenSeq(r.begin(), r.end() - extra.size());
    }
    set.members.push_back(std::move(m));
  }
  return set;
}

}  // namespace

std::string CandidateSet::shared_phrase_lower() const {
  TokenSeq all = prefix;
  all.insert(all.end(), postfix.begin(), postfix.end());
  return to_lower(join(all));
}

std::vector<CandidateSet> build_candidate_sets(const CategoryGraph& graph,
                                               int min_size) {
  if (min_size < 2) throw std::invalid_argument("min_size must be >= 2");
  std::vector<CandidateSet> out;
  for (Symbol parent : graph.categories()) {
    auto child_span = graph.children(parent);
    if (child_span.size() < 2) continue;
    std::vector<Symbol> children(child_span.begin(), child_span.end());

    std::vector<Group> postfix_groups = partition_by_affix(graph, children, true);
    std::vector<Group> prefix_groups = partition_by_affix(graph, children, false);

    // A child claimed by both affix kinds goes to the larger group at
    // formation time; ties go to the postfix group.
    std::unordered_map<Symbol, Group*> in_postfix;
    for (Group& g : postfix_groups) {
      for (Symbol c : g.members) in_postfix[c] = &g;
    }
    for (Group& pre : prefix_groups) {
      for (auto it = pre.members.begin(); it != pre.members.end();) {
        auto hit = in_postfix.find(*it);
        if (hit == in_postfix.end()) {
          ++it;
          continue;
        }
        Group& post = *hit->second;
        if (pre.formation_size > post.formation_size) {
          std::erase(post.members, *it);
          ++it;
        } else {
          it = pre.members.erase(it);
        }
      }
    }

    std::vector<CandidateSet> parent_sets;
    for (const Group& g : postfix_groups) {
      if (g.members.size() < static_cast<size_t>(min_size)) continue;
      CandidateSet set = to_candidate_set(graph, parent, g);
      if (set.members.size() >= static_cast<size_t>(min_size)) {
        parent_sets.push_back(std::move(set));
      }
    }
    for (const Group& g : prefix_groups) {
      if (g.members.size() < static_cast<size_t>(min_size)) continue;
      CandidateSet set = to_candidate_set(graph, parent, g);
      if (set.members.size() >= static_cast<size_t>(min_size)) {
        parent_sets.push_back(std::move(set));
      }
    }
    std::sort(parent_sets.begin(), parent_sets.end(),
              [](const CandidateSet& a, const CandidateSet& b) {
                if (a.prefix != b.prefix) return a.prefix < b.prefix;
                return a.postfix < b.postfix;
              });
    for (CandidateSet& s : parent_sets) out.push_back(std::move(s));
  }
  return out;
}

const std::vector<std::string>& variable_part(const CandidateSet& set,
                                              Symbol member_category) {
  for (const CandidateMember& m : set.members) {
    if (m.category == member_category) return m.variable;
  }
  throw std::invalid_argument("category is not a member of the candidate set");
}

std::string variable_phrase_lower(const CandidateSet& set, Symbol member_category) {
  return to_lower(join(variable_part(set, member_category)));
}

}  // namespace axmine
