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

#include "assertion_generation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace axmine {

namespace {

struct FactKey {
  Symbol subject;
  Symbol property;
  ObjectRef object;

  bool operator==(const FactKey&) const = default;
};

struct FactKeyHash {
  size_t operator()(const FactKey& k) const {
    size_t h = ObjectRefHash{}(k.object);
    h = h * 1000003u ^ k.subject;
    h = h * 1000003u ^ k.property;
    return h;
  }
};

// Provenance precedence: higher confidence first, then the earlier axiom.
bool better_provenance(const std::vector<Axiom>& axioms, size_t a, size_t b) {
  if (axioms[a].confidence != axioms[b].confidence) {
    return axioms[a].confidence > axioms[b].confidence;
  }
  return a < b;
}

}  // namespace

std::string_view assertion_status_name(AssertionStatus status) {
  switch (status) {
    case AssertionStatus::kNovel: return "novel";
    case AssertionStatus::kPreExisting: return "pre-existing";
    case AssertionStatus::kFilteredFunctional: return "functional-conflict";
    case AssertionStatus::kFilteredDisjoint: return "disjointness-conflict";
  }
  return "unknown";
}

std::vector<Assertion> apply_axioms(const std::vector<Axiom>& axioms,
                                    const CategoryGraph& graph, const KgIndex& kg,
                                    const OntologyIndex& ontology) {
  std::vector<Assertion> out;
  std::unordered_map<FactKey, size_t, FactKeyHash> index;

  auto emit = [&](Symbol subject, Symbol property, const ObjectRef& object,
                  bool is_type, size_t axiom_index, AssertionStatus status) {
    FactKey key{subject, property, object};
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, out.size());
      out.push_back(Assertion{subject, property, object, is_type, axiom_index, status});
      return;
    }
    Assertion& existing = out[it->second];
    if (better_provenance(axioms, axiom_index, existing.axiom_index)) {
      existing.axiom_index = axiom_index;
    }
  };

  for (size_t i = 0; i < axioms.size(); ++i) {
    const Axiom& axiom = axioms[i];
    auto members = graph.resources(axiom.category);
    if (axiom.kind == PatternKind::kProperty) {
      for (Symbol r : members) {
        AssertionStatus status = kg.has_triple(r, axiom.implication, axiom.value)
                                     ? AssertionStatus::kPreExisting
                                     : AssertionStatus::kNovel;
        emit(r, axiom.implication, axiom.value, false, i, status);
      }
    } else {
      // Implication first, closure types in name order: fixes the emission
      // order that later breaks exact ties during filtering.
      std::vector<Symbol> types{axiom.implication};
      auto closure = ontology.superclass_closure(axiom.implication);
      types.insert(types.end(), closure.begin(), closure.end());
      std::sort(types.begin() + 1, types.end(), [&](Symbol a, Symbol b) {
        return kg.syms().less(a, b);
      });
      for (Symbol r : members) {
        for (Symbol t : types) {
          ObjectRef object{ObjKind::kResource, t, kNoSymbol};
          AssertionStatus status = kg.has_type(r, t) ? AssertionStatus::kPreExisting
                                                     : AssertionStatus::kNovel;
          emit(r, kg.type_property(), object, true, i, status);
        }
      }
    }
  }
  return out;
}

void post_filter_relations(std::vector<Assertion>& assertions, const KgIndex& kg,
                           const std::unordered_set<Symbol>& functional,
                           const std::vector<Axiom>& axioms) {
  // Novel assertions per (subject, functional property).
  std::map<std::pair<Symbol, Symbol>, std::vector<size_t>> groups;
  for (size_t i = 0; i < assertions.size(); ++i) {
    const Assertion& a = assertions[i];
    if (a.is_type || a.status != AssertionStatus::kNovel) continue;
    if (!functional.contains(a.property)) continue;
    groups[{a.subject, a.property}].push_back(i);
  }
  for (auto& [key, indices] : groups) {
    bool has_existing = false;
    for (const auto& [p, v] : kg.facts_of(key.first)) {
      if (p == key.second) {
        has_existing = true;
        break;
      }
    }
    if (has_existing) {
      // A novel assertion always differs from every existing value, so any
      // existing value is a conflict.
      for (size_t i : indices) {
        assertions[i].status = AssertionStatus::kFilteredFunctional;
      }
      continue;
    }
    if (indices.size() < 2) continue;
    std::sort(indices.begin(), indices.end(), [&](size_t a, size_t b) {
      if (assertions[a].axiom_index != assertions[b].axiom_index) {
        return better_provenance(axioms, assertions[a].axiom_index,
                                 assertions[b].axiom_index);
      }
      return a < b;
    });
    for (size_t k = 1; k < indices.size(); ++k) {
      assertions[indices[k]].status = AssertionStatus::kFilteredFunctional;
    }
  }
}

void post_filter_types(std::vector<Assertion>& assertions, const KgIndex& kg,
                       const OntologyIndex& ontology,
                       const std::vector<Axiom>& axioms) {
  std::map<Symbol, std::vector<size_t>> by_subject;
  for (size_t i = 0; i < assertions.size(); ++i) {
    const Assertion& a = assertions[i];
    if (!a.is_type || a.status != AssertionStatus::kNovel) continue;
    by_subject[a.subject].push_back(i);
  }
  for (auto& [subject, indices] : by_subject) {
    std::sort(indices.begin(), indices.end(), [&](size_t a, size_t b) {
      if (assertions[a].axiom_index != assertions[b].axiom_index) {
        return better_provenance(axioms, assertions[a].axiom_index,
                                 assertions[b].axiom_index);
      }
      return a < b;
    });
    auto existing = kg.types_of(subject);
    std::vector<Symbol> accepted;
    for (size_t i : indices) {
      Symbol t = assertions[i].object.lex;
      bool conflict = false;
      for (Symbol e : existing) {
        if (ontology.are_disjoint(t, e)) {
          conflict = true;
          break;
        }
      }
      for (size_t k = 0; !conflict && k < accepted.size(); ++k) {
        if (ontology.are_disjoint(t, accepted[k])) conflict = true;
      }
      if (conflict) {
        assertions[i].status = AssertionStatus::kFilteredDisjoint;
      } else {
        accepted.push_back(t);
      }
    }
  }
}

AssertionSummary summarize(const std::vector<Assertion>& assertions) {
  AssertionSummary s;
  s.generated = assertions.size();
  for (const Assertion& a : assertions) {
    switch (a.status) {
      case AssertionStatus::kNovel:
        if (a.is_type) {
          ++s.novel_types;
        } else {
          ++s.novel_relations;
        }
        break;
      case AssertionStatus::kPreExisting: ++s.pre_existing; break;
      case AssertionStatus::kFilteredFunctional: ++s.filtered_functional; break;
      case AssertionStatus::kFilteredDisjoint: ++s.filtered_disjoint; break;
    }
  }
  return s;
}

std::string AssertionSummary::to_text() const {
  std::ostringstream os;
  os << "generated assertions: " << generated << '\n'
     << "novel relation assertions: " << novel_relations << '\n'
     << "novel type assertions: " << novel_types << '\n'
     << "pre-existing assertions: " << pre_existing << '\n'
     << "filtered (functional conflict): " << filtered_functional << '\n'
     << "filtered (disjointness conflict): " << filtered_disjoint << '\n';
  return os.str();
}

}  // namespace axmine
