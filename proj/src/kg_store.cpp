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

#include "kg_store.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "error.hpp"
#include "log.hpp"
#include "text.hpp"

namespace axmine {

namespace {

// Consumes `<iri>` from s starting at pos; returns symbol or nullopt.
std::optional<Symbol> take_iri(std::string_view s, size_t* pos, SymbolTable& syms) {
  if (*pos >= s.size() || s[*pos] != '<') return std::nullopt;
  size_t end = s.find('>', *pos + 1);
  if (end == std::string_view::npos) return std::nullopt;
  Symbol id = syms.intern(s.substr(*pos + 1, end - *pos - 1));
  *pos = end + 1;
  return id;
}

void skip_ws(std::string_view s, size_t* pos) {
  while (*pos < s.size() && (s[*pos] == ' ' || s[*pos] == '\t')) ++(*pos);
}

bool take_literal(std::string_view s, size_t* pos, SymbolTable& syms, ObjectRef* out) {
  if (*pos >= s.size() || s[*pos] != '"') return false;
  size_t i = *pos + 1;
  while (i < s.size()) {
    if (s[i] == '\\') {
      i += 2;
      continue;
    }
    if (s[i] == '"') break;
    ++i;
  }
  if (i >= s.size()) return false;
  out->kind = ObjKind::kLiteral;
  out->lex = syms.intern(nt_unescape(s.substr(*pos + 1, i - *pos - 1)));
  out->datatype = kNoSymbol;
  *pos = i + 1;
  if (*pos + 1 < s.size() && s[*pos] == '^' && s[*pos + 1] == '^') {
    *pos += 2;
    auto dt = take_iri(s, pos, syms);
    if (!dt) return false;
    out->datatype = *dt;
  } else if (*pos < s.size() && s[*pos] == '@') {
    size_t start = *pos;
    ++(*pos);
    while (*pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[*pos])) || s[*pos] == '-')) {
      ++(*pos);
    }
    if (*pos == start + 1) return false;
    out->datatype = syms.intern(s.substr(start, *pos - start));
  }
  return true;
}

}  // namespace

LineStatus parse_ntriple_line(std::string_view line, SymbolTable& syms,
                              ParsedTriple* out) {
  std::string_view s = trim(line);
  if (s.empty() || s[0] == '#') return LineStatus::kIgnored;

  size_t pos = 0;
  auto subject = take_iri(s, &pos, syms);
  if (!subject) return LineStatus::kSkipped;
  skip_ws(s, &pos);
  auto property = take_iri(s, &pos, syms);
  if (!property) return LineStatus::kSkipped;
  skip_ws(s, &pos);

  ObjectRef object;
  if (pos < s.size() && s[pos] == '<') {
    auto iri = take_iri(s, &pos, syms);
    if (!iri) return LineStatus::kSkipped;
    object = ObjectRef{ObjKind::kResource, *iri, kNoSymbol};
  } else if (!take_literal(s, &pos, syms, &object)) {
    return LineStatus::kSkipped;
  }

  skip_ws(s, &pos);
  if (pos >= s.size() || s[pos] != '.') return LineStatus::kSkipped;
  ++pos;
  skip_ws(s, &pos);
  if (pos != s.size()) return LineStatus::kSkipped;

  out->subject = *subject;
  out->property = *property;
  out->object = object;
  return LineStatus::kTriple;
}

bool parse_nt_object_term(std::string_view s, SymbolTable& syms, ObjectRef* out) {
  s = trim(s);
  size_t pos = 0;
  if (!s.empty() && s[0] == '<') {
    auto iri = take_iri(s, &pos, syms);
    if (!iri || pos != s.size()) return false;
    *out = ObjectRef{ObjKind::kResource, *iri, kNoSymbol};
    return true;
  }
  return take_literal(s, &pos, syms, out) && pos == s.size();
}

std::string nt_term(const SymbolTable& syms, const ObjectRef& o) {
  if (o.kind == ObjKind::kResource) {
    return "<" + std::string(syms.at(o.lex)) + ">";
  }
  std::string out = "\"" + nt_escape(syms.at(o.lex)) + "\"";
  if (o.datatype != kNoSymbol) {
    std::string_view dt = syms.at(o.datatype);
    if (!dt.empty() && dt[0] == '@') {
      out += dt;
    } else {
      out += "^^<" + std::string(dt) + ">";
    }
  }
  return out;
}

std::string nt_line(const SymbolTable& syms, Symbol s, Symbol p, const ObjectRef& o) {
  return "<" + std::string(syms.at(s)) + "> <" + std::string(syms.at(p)) + "> " +
         nt_term(syms, o) + " .";
}

std::string LoadReport::to_text() const {
  std::ostringstream os;
  os << source << ": " << lines << " lines, " << parsed << " parsed, "
     << skipped << " skipped, " << ignored << " blank/comment";
  return os.str();
}

KgIndex::KgIndex(SymbolTable& syms)
    : syms_(&syms), type_property_(syms.intern(kRdfTypeIri)) {}

LoadReport KgIndex::load_ntriples(std::istream& in, std::string_view source_name) {
  LoadReport report;
  report.source = source_name;
  std::string line;
  ParsedTriple t;
  while (std::getline(in, line)) {
    ++report.lines;
    switch (parse_ntriple_line(line, *syms_, &t)) {
      case LineStatus::kTriple:
        ++report.parsed;
        add_triple(t.subject, t.property, t.object);
        break;
      case LineStatus::kSkipped:
        ++report.skipped;
        break;
      case LineStatus::kIgnored:
        ++report.ignored;
        break;
    }
  }
  finalized_ = false;
  return report;
}

void KgIndex::add_triple(Symbol s, Symbol p, const ObjectRef& o) {
  by_subject_[s].emplace_back(p, o);
  by_prop_object_[PropObj{p, o}].push_back(s);
  if (p == type_property_ && o.kind == ObjKind::kResource) {
    types_of_[s].push_back(o.lex);
  }
  finalized_ = false;
}

void KgIndex::finalize() {
  if (finalized_) return;
  auto fact_less = [](const std::pair<Symbol, ObjectRef>& a,
                      const std::pair<Symbol, ObjectRef>& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.kind != b.second.kind) return a.second.kind < b.second.kind;
    if (a.second.lex != b.second.lex) return a.second.lex < b.second.lex;
    return a.second.datatype < b.second.datatype;
  };
  triples_ = 0;
  for (auto& [s, facts] : by_subject_) {
    std::sort(facts.begin(), facts.end(), fact_less);
    facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
    triples_ += facts.size();
  }
  for (auto& [key, subjects] : by_prop_object_) {
    std::sort(subjects.begin(), subjects.end());
    subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
  }
  for (auto& [r, types] : types_of_) {
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
  }
  finalized_ = true;
}

const std::vector<std::pair<Symbol, ObjectRef>>& KgIndex::facts_of(Symbol subject) const {
  static const std::vector<std::pair<Symbol, ObjectRef>> kEmpty;
  auto it = by_subject_.find(subject);
  return it == by_subject_.end() ? kEmpty : it->second;
}

std::span<const Symbol> KgIndex::subjects_of(Symbol property, const ObjectRef& value) const {
  auto it = by_prop_object_.find(PropObj{property, value});
  if (it == by_prop_object_.end()) return {};
  return it->second;
}

bool KgIndex::has_triple(Symbol s, Symbol p, const ObjectRef& v) const {
  auto subjects = subjects_of(p, v);
  return std::binary_search(subjects.begin(), subjects.end(), s);
}

std::span<const Symbol> KgIndex::types_of(Symbol resource) const {
  auto it = types_of_.find(resource);
  if (it == types_of_.end()) return {};
  return it->second;
}

bool KgIndex::has_type(Symbol resource, Symbol type) const {
  auto types = types_of(resource);
  return std::binary_search(types.begin(), types.end(), type);
}

double KgIndex::freq(std::span<const Symbol> members, Symbol p, const ObjectRef& v) const {
  if (members.empty()) {
    throw std::invalid_argument("freq: empty member set");
  }
  auto subjects = subjects_of(p, v);
  size_t hits = 0;
  for (Symbol r : members) {
    if (std::binary_search(subjects.begin(), subjects.end(), r)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(members.size());
}

std::vector<Symbol> KgIndex::detect_functional_properties(double threshold) const {
  std::unordered_map<Symbol, std::pair<uint64_t, uint64_t>> usage;  // any, multi
  for (const auto& [s, facts] : by_subject_) {
    size_t i = 0;
    while (i < facts.size()) {
      size_t j = i;
      while (j < facts.size() && facts[j].first == facts[i].first) ++j;
      auto& u = usage[facts[i].first];
      ++u.first;
      if (j - i >= 2) ++u.second;  // facts are distinct after finalize()
      i = j;
    }
  }
  std::vector<Symbol> out;
  for (const auto& [p, u] : usage) {
    double rate = static_cast<double>(u.second) / static_cast<double>(u.first);
    if (rate < threshold) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [this](Symbol a, Symbol b) { return syms_->less(a, b); });
  return out;
}

OntologyIndex::OntologyIndex(SymbolTable& syms)
    : syms_(&syms), root_(syms.intern(kOwlThingIri)) {}

void OntologyIndex::set_universal_root(std::string_view iri) {
  root_ = syms_->intern(iri);
  finalized_ = false;
}

LoadReport OntologyIndex::load_subclass_ntriples(std::istream& in,
                                                 std::string_view source_name) {
  LoadReport report;
  report.source = source_name;
  Symbol subclass_of = syms_->intern(kRdfsSubClassOfIri);
  std::string line;
  ParsedTriple t;
  while (std::getline(in, line)) {
    ++report.lines;
    switch (parse_ntriple_line(line, *syms_, &t)) {
      case LineStatus::kTriple:
        if (t.property == subclass_of && t.object.kind == ObjKind::kResource) {
          ++report.parsed;
          add_subclass(t.subject, t.object.lex);
        } else {
          ++report.skipped;
        }
        break;
      case LineStatus::kSkipped:
        ++report.skipped;
        break;
      case LineStatus::kIgnored:
        ++report.ignored;
        break;
    }
  }
  return report;
}

LoadReport OntologyIndex::load_disjoint_ntriples(std::istream& in,
                                                 std::string_view source_name) {
  LoadReport report;
  report.source = source_name;
  Symbol disjoint_with = syms_->intern(kOwlDisjointWithIri);
  std::string line;
  ParsedTriple t;
  while (std::getline(in, line)) {
    ++report.lines;
    switch (parse_ntriple_line(line, *syms_, &t)) {
      case LineStatus::kTriple:
        if (t.property == disjoint_with && t.object.kind == ObjKind::kResource) {
          ++report.parsed;
          add_disjoint(t.subject, t.object.lex);
        } else {
          ++report.skipped;
        }
        break;
      case LineStatus::kSkipped:
        ++report.skipped;
        break;
      case LineStatus::kIgnored:
        ++report.ignored;
        break;
    }
  }
  return report;
}

void OntologyIndex::add_subclass(Symbol sub, Symbol super) {
  direct_supers_[sub].push_back(super);
  if (!direct_supers_.contains(super)) direct_supers_[super];
  finalized_ = false;
}

void OntologyIndex::add_disjoint(Symbol a, Symbol b) {
  disjoint_.insert(pair_key(a, b));
}

uint64_t OntologyIndex::pair_key(Symbol a, Symbol b) const {
  Symbol lo = std::min(a, b), hi = std::max(a, b);
  return (static_cast<uint64_t>(lo) << 32) | hi;
}

void OntologyIndex::finalize() {
  if (finalized_) return;
  // Cycle check, iterative DFS with colors.
  enum { kWhite, kGray, kBlack };
  std::unordered_map<Symbol, int> color;
  for (const auto& [t, supers] : direct_supers_) color[t] = kWhite;
  for (const auto& [start, unused] : direct_supers_) {
    if (color[start] != kWhite) continue;
    std::vector<std::pair<Symbol, size_t>> stack{{start, 0}};
    color[start] = kGray;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& supers = direct_supers_.at(node);
      if (next < supers.size()) {
        Symbol s = supers[next++];
        if (color[s] == kGray) {
          std::string cycle(syms_->at(s));
          for (auto it = stack.begin(); it != stack.end(); ++it) {
            if (it->first == s) {
              cycle.clear();
              for (auto jt = it; jt != stack.end(); ++jt) {
                cycle += std::string(syms_->at(jt->first)) + " -> ";
              }
              cycle += std::string(syms_->at(s));
              break;
            }
          }
          throw Error(Status::kValidation, "subclass hierarchy has a cycle: " + cycle);
        }
        if (color[s] == kWhite) {
          color[s] = kGray;
          stack.emplace_back(s, 0);
        }
      } else {
        color[node] = kBlack;
        stack.pop_back();
      }
    }
  }

  // Memoized closures on the acyclic hierarchy, root and self excluded.
  closure_.clear();
  std::vector<Symbol> order;
  for (const auto& [t, unused] : direct_supers_) order.push_back(t);
  std::sort(order.begin(), order.end());
  std::unordered_map<Symbol, bool> done;
  auto compute = [&](Symbol t, auto&& self) -> const std::vector<Symbol>& {
    if (done[t]) return closure_[t];
    done[t] = true;
    std::vector<Symbol> acc;
    for (Symbol s : direct_supers_.at(t)) {
      if (s != root_ && s != t) acc.push_back(s);
      if (direct_supers_.contains(s)) {
        const auto& up = self(s, self);
        acc.insert(acc.end(), up.begin(), up.end());
      }
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    std::erase(acc, t);
    std::erase(acc, root_);
    closure_[t] = std::move(acc);
    return closure_[t];
  };
  for (Symbol t : order) compute(t, compute);
  finalized_ = true;
}

std::span<const Symbol> OntologyIndex::superclass_closure(Symbol t) const {
  assert(finalized_);
  auto it = closure_.find(t);
  if (it == closure_.end()) {
    if (warned_unknown_.insert(t).second) {
      log_warn("superclass_closure: unknown type " + std::string(syms_->at(t)));
    }
    return {};
  }
  return it->second;
}

bool OntologyIndex::is_known_type(Symbol t) const {
  return direct_supers_.contains(t);
}

bool OntologyIndex::are_disjoint(Symbol t1, Symbol t2) const {
  if (disjoint_.empty()) return false;
  auto ancestors = [this](Symbol t) {
    std::vector<Symbol> out{t};
    auto it = closure_.find(t);
    if (it != closure_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
  };
  for (Symbol a : ancestors(t1)) {
    for (Symbol b : ancestors(t2)) {
      if (disjoint_.contains(pair_key(a, b))) return true;
    }
  }
  return false;
}

}  // namespace axmine
