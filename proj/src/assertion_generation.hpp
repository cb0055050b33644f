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

#ifndef AXMINE_ASSERTION_GENERATION_HPP_
#define AXMINE_ASSERTION_GENERATION_HPP_

#include <string>
#include <unordered_set>
#include <vector>

#include "category_graph.hpp"
#include "kg_store.hpp"
#include "pattern_application.hpp"

namespace axmine {

enum class AssertionStatus {
  kNovel,
  kPreExisting,
  kFilteredFunctional,
  kFilteredDisjoint,
};

std::string_view assertion_status_name(AssertionStatus status);

// One materialised fact, with the axiom it came from. Type assertions carry
// the type in the object's resource slot and the rdf:type property.
struct Assertion {
  Symbol subject = kNoSymbol;
  Symbol property = kNoSymbol;
  ObjectRef object;
  bool is_type = false;
  size_t axiom_index = 0;  // provenance into the axiom vector
  AssertionStatus status = AssertionStatus::kNovel;
};

// One assertion per (axiom, member resource); type axioms additionally
// expand through the superclass closure, one assertion per closure type.
// Assertions already present in the knowledge graph are marked
// pre-existing. Identical facts produced by different axioms collapse into
// the one with the highest-confidence provenance.
std::vector<Assertion> apply_axioms(const std::vector<Axiom>& axioms,
                                    const CategoryGraph& graph, const KgIndex& kg,
                                    const OntologyIndex& ontology);

// Marks novel relation assertions that would give a functional property a
// second value: any knowledge-graph value for (s, p) filters every novel
// candidate, and of several novel values for one (s, p) only the
// highest-confidence one survives.
void post_filter_relations(std::vector<Assertion>& assertions, const KgIndex& kg,
                           const std::unordered_set<Symbol>& functional,
                           const std::vector<Axiom>& axioms);

// Marks novel type assertions disjoint with an existing type of the subject
// or with an already accepted novel type; candidates are visited in
// descending provenance confidence.
void post_filter_types(std::vector<Assertion>& assertions, const KgIndex& kg,
                       const OntologyIndex& ontology,
                       const std::vector<Axiom>& axioms);

struct AssertionSummary {
  uint64_t generated = 0;
  uint64_t novel_relations = 0;
  uint64_t novel_types = 0;
  uint64_t pre_existing = 0;
  uint64_t filtered_functional = 0;
  uint64_t filtered_disjoint = 0;

  std::string to_text() const;
};

AssertionSummary summarize(const std::vector<Assertion>& assertions);

}  // namespace axmine

#endif  // AXMINE_ASSERTION_GENERATION_HPP_
