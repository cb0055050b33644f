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

#ifndef AXMINE_KG_STORE_HPP_
#define AXMINE_KG_STORE_HPP_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "symbol_table.hpp"

namespace axmine {

inline constexpr std::string_view kRdfTypeIri =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsSubClassOfIri =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kOwlDisjointWithIri =
    "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view kOwlThingIri =
    "http://www.w3.org/2002/07/owl#Thing";

enum class ObjKind : uint8_t { kResource, kLiteral };

// Object position of a triple: an IRI, or a literal form plus an optional
// datatype IRI / "@lang" tag. Literal equality is exact form + tag match.
struct ObjectRef {
  ObjKind kind = ObjKind::kResource;
  Symbol lex = kNoSymbol;
  Symbol datatype = kNoSymbol;

  auto operator<=>(const ObjectRef&) const = default;
  bool operator==(const ObjectRef&) const = default;
};

struct ObjectRefHash {
  size_t operator()(const ObjectRef& o) const {
    uint64_t h = static_cast<uint64_t>(o.lex) * 0x9e3779b97f4a7c15ULL;
    h ^= (static_cast<uint64_t>(o.datatype) + 0x7f4a7c15ULL) + (h << 6) + (h >> 2);
    return static_cast<size_t>(h ^ static_cast<uint64_t>(o.kind));
  }
};

inline ObjectRef make_resource(SymbolTable& syms, std::string_view iri) {
  return ObjectRef{ObjKind::kResource, syms.intern(iri), kNoSymbol};
}

struct ParsedTriple {
  Symbol subject = kNoSymbol;
  Symbol property = kNoSymbol;
  ObjectRef object;
};

enum class LineStatus { kTriple, kSkipped, kIgnored };

// One N-Triples-like line: `<s> <p> <o> .` with the object either an IRI or
// a quoted literal with optional ^^<datatype> / @lang suffix. Blank lines
// and # comments are ignored; anything else that does not parse is skipped.
LineStatus parse_ntriple_line(std::string_view line, SymbolTable& syms,
                              ParsedTriple* out);

// Serialised N-Triples term / line for output.
std::string nt_term(const SymbolTable& syms, const ObjectRef& o);
std::string nt_line(const SymbolTable& syms, Symbol s, Symbol p, const ObjectRef& o);

// Parses a single object term as produced by nt_term.
bool parse_nt_object_term(std::string_view s, SymbolTable& syms, ObjectRef* out);

struct LoadReport {
  std::string source;
  uint64_t lines = 0;
  uint64_t parsed = 0;
  uint64_t skipped = 0;
  uint64_t ignored = 0;  // blank / comment lines

  std::string to_text() const;
};

// Immutable-after-finalize triple index. Queries are pure and safe for
// concurrent reads; loading is single-writer.
class KgIndex {
 public:
  explicit KgIndex(SymbolTable& syms);

  LoadReport load_ntriples(std::istream& in, std::string_view source_name);
  void add_triple(Symbol s, Symbol p, const ObjectRef& o);
  void finalize();

  const std::vector<std::pair<Symbol, ObjectRef>>& facts_of(Symbol subject) const;
  std::span<const Symbol> subjects_of(Symbol property, const ObjectRef& value) const;
  bool has_triple(Symbol s, Symbol p, const ObjectRef& v) const;
  std::span<const Symbol> types_of(Symbol resource) const;
  bool has_type(Symbol resource, Symbol type) const;
  bool known_subject(Symbol s) const { return by_subject_.contains(s); }

  // Fraction of members carrying the fact (p, v). Members must be non-empty;
  // callers skip empty categories upstream.
  double freq(std::span<const Symbol> members, Symbol p, const ObjectRef& v) const;

  // Properties whose share of subjects with >= 2 distinct objects is
  // strictly below the threshold, among subjects using the property at all.
  std::vector<Symbol> detect_functional_properties(double threshold) const;

  Symbol type_property() const { return type_property_; }
  uint64_t triple_count() const { return triples_; }
  SymbolTable& syms() const { return *syms_; }

 private:
  struct PropObj {
    Symbol p;
    ObjectRef o;
    bool operator==(const PropObj&) const = default;
  };
  struct PropObjHash {
    size_t operator()(const PropObj& k) const {
      return ObjectRefHash{}(k.o) * 1315423911u ^ k.p;
    }
  };

  SymbolTable* syms_;
  Symbol type_property_;
  std::unordered_map<Symbol, std::vector<std::pair<Symbol, ObjectRef>>> by_subject_;
  std::unordered_map<PropObj, std::vector<Symbol>, PropObjHash> by_prop_object_;
  std::unordered_map<Symbol, std::vector<Symbol>> types_of_;
  uint64_t triples_ = 0;
  bool finalized_ = false;
};

// Subclass edges, pairwise disjointness and closure queries. finalize()
// rejects cyclic hierarchies and precomputes transitive closures with the
// universal root type excluded.
class OntologyIndex {
 public:
  explicit OntologyIndex(SymbolTable& syms);

  void set_universal_root(std::string_view iri);
  LoadReport load_subclass_ntriples(std::istream& in, std::string_view source_name);
  LoadReport load_disjoint_ntriples(std::istream& in, std::string_view source_name);
  void add_subclass(Symbol sub, Symbol super);
  void add_disjoint(Symbol a, Symbol b);
  void finalize();

  // Transitive supertypes, sorted, never containing the type itself or the
  // universal root. Unknown types yield an empty set (logged once each).
  std::span<const Symbol> superclass_closure(Symbol t) const;
  bool are_disjoint(Symbol t1, Symbol t2) const;
  bool is_known_type(Symbol t) const;
  Symbol universal_root() const { return root_; }
  size_t disjoint_pair_count() const { return disjoint_.size(); }

 private:
  uint64_t pair_key(Symbol a, Symbol b) const;

  SymbolTable* syms_;
  Symbol root_;
  std::unordered_map<Symbol, std::vector<Symbol>> direct_supers_;
  std::unordered_set<uint64_t> disjoint_;
  std::unordered_map<Symbol, std::vector<Symbol>> closure_;
  mutable std::unordered_set<Symbol> warned_unknown_;
  bool finalized_ = false;
};

}  // namespace axmine

#endif  // AXMINE_KG_STORE_HPP_
