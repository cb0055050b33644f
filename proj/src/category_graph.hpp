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

#ifndef AXMINE_CATEGORY_GRAPH_HPP_
#define AXMINE_CATEGORY_GRAPH_HPP_

#include <istream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "symbol_table.hpp"

namespace axmine {

inline constexpr std::string_view kDefaultRootCategory = "Main_topic_classifications";
inline const std::vector<std::string> kDefaultStopwords = {"wikipedia", "lists",
                                                           "template", "stub"};

// Category graph with per-category resource membership. Ids keep their raw
// form (underscores); the title replaces underscores with spaces and the
// name tokens are the whitespace-split title words. The graph is directed
// and may contain cycles.
class CategoryGraph {
 public:
  explicit CategoryGraph(SymbolTable& syms);

  // edges: `parent<TAB>child` rows; membership: `category<TAB>resource`
  // rows. Duplicate edges collapse; membership rows naming categories absent
  // from the edge file create the node implicitly (logged).
  static CategoryGraph load(std::istream& edges, std::istream& membership,
                            SymbolTable& syms, std::string_view root_id);

  void add_node(std::string_view id);
  void add_edge(std::string_view parent, std::string_view child);
  void add_member(std::string_view category, std::string_view resource);
  void set_root(std::string_view root_id);
  void finalize();

  // Keeps only nodes reachable from the root along child edges without
  // passing through a node whose lowercased title contains a stopword as a
  // substring; edges and membership restricted to survivors. Idempotent.
  CategoryGraph cleaned(const std::vector<std::string>& stopwords) const;

  bool contains(Symbol category) const;
  std::span<const Symbol> categories() const { return order_; }  // sorted by id
  std::span<const Symbol> children(Symbol category) const;
  std::span<const Symbol> resources(Symbol category) const;
  const std::vector<std::string>& tokens(Symbol category) const;
  std::string title(Symbol category) const;
  Symbol root() const { return root_; }
  size_t node_count() const { return nodes_.size(); }
  size_t resource_universe_size() const { return resource_universe_; }
  SymbolTable& syms() const { return *syms_; }

 private:
  struct Node {
    std::vector<std::string> tokens;
    std::vector<Symbol> children;   // sorted by id string after finalize
    std::vector<Symbol> resources;  // sorted
  };

  SymbolTable* syms_;
  Symbol root_ = kNoSymbol;
  std::unordered_map<Symbol, Node> nodes_;
  std::vector<Symbol> order_;
  size_t resource_universe_ = 0;
  bool finalized_ = false;
};

}  // namespace axmine

#endif  // AXMINE_CATEGORY_GRAPH_HPP_
