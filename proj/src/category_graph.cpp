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

#include "category_graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "error.hpp"
#include "log.hpp"
#include "text.hpp"

namespace axmine {

namespace {

std::vector<std::string> title_tokens(std::string_view id) {
  std::string title(id);
  std::replace(title.begin(), title.end(), '_', ' ');
  return split_ws(title);
}

bool has_stopword(const std::string& lowered_title,
                  const std::vector<std::string>& stopwords) {
  for (const std::string& w : stopwords) {
    if (!w.empty() && lowered_title.find(w) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

CategoryGraph::CategoryGraph(SymbolTable& syms) : syms_(&syms) {}

CategoryGraph CategoryGraph::load(std::istream& edges, std::istream& membership,
                                  SymbolTable& syms, std::string_view root_id) {
  CategoryGraph g(syms);
  g.set_root(root_id);
  std::string line;
  while (std::getline(edges, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      log_warn("edge row with " + std::to_string(fields.size()) + " fields skipped");
      continue;
    }
    g.add_edge(fields[0], fields[1]);
  }
  size_t implicit = 0;
  while (std::getline(membership, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      log_warn("membership row with " + std::to_string(fields.size()) + " fields skipped");
      continue;
    }
    Symbol cat = syms.intern(fields[0]);
    if (!g.nodes_.contains(cat)) ++implicit;
    g.add_member(fields[0], fields[1]);
  }
  if (implicit > 0) {
    log_warn(std::to_string(implicit) +
             " categories only named in the membership input; created implicitly");
  }
  g.finalize();
  return g;
}

void CategoryGraph::add_node(std::string_view id) {
  Symbol s = syms_->intern(id);
  auto [it, inserted] = nodes_.try_emplace(s);
  if (inserted) it->second.tokens = title_tokens(id);
  finalized_ = false;
}

void CategoryGraph::add_edge(std::string_view parent, std::string_view child) {
  add_node(parent);
  add_node(child);
  nodes_[*syms_->find(parent)].children.push_back(*syms_->find(child));
  finalized_ = false;
}

void CategoryGraph::add_member(std::string_view category, std::string_view resource) {
  add_node(category);
  nodes_[*syms_->find(category)].resources.push_back(syms_->intern(resource));
  finalized_ = false;
}

void CategoryGraph::set_root(std::string_view root_id) {
  root_ = syms_->intern(root_id);
}

void CategoryGraph::finalize() {
  if (finalized_) return;
  order_.clear();
  std::unordered_set<Symbol> universe;
  for (auto& [id, node] : nodes_) {
    order_.push_back(id);
    auto by_name = [this](Symbol a, Symbol b) { return syms_->less(a, b); };
    std::sort(node.children.begin(), node.children.end(), by_name);
    node.children.erase(std::unique(node.children.begin(), node.children.end()),
                        node.children.end());
    std::sort(node.resources.begin(), node.resources.end());
    node.resources.erase(std::unique(node.resources.begin(), node.resources.end()),
                         node.resources.end());
    universe.insert(node.resources.begin(), node.resources.end());
  }
  std::sort(order_.begin(), order_.end(),
            [this](Symbol a, Symbol b) { return syms_->less(a, b); });
  resource_universe_ = universe.size();
  finalized_ = true;
}

CategoryGraph CategoryGraph::cleaned(const std::vector<std::string>& stopwords) const {
  if (!nodes_.contains(root_)) {
    throw Error(Status::kValidation,
                "root category '" + std::string(syms_->at(root_)) +
                    "' not present in the category graph");
  }
  std::vector<std::string> lowered;
  lowered.reserve(stopwords.size());
  for (const std::string& w : stopwords) lowered.push_back(to_lower(w));

  auto forbidden = [&](Symbol id) {
    const Node& n = nodes_.at(id);
    return has_stopword(to_lower(join(n.tokens)), lowered);
  };

  // BFS from the root that never enters a forbidden node, so the retained
  // set is reachable within the cleaned graph itself.
  std::unordered_set<Symbol> retained;
  if (!forbidden(root_)) {
    std::deque<Symbol> queue{root_};
    retained.insert(root_);
    while (!queue.empty()) {
      Symbol cur = queue.front();
      queue.pop_front();
      for (Symbol child : nodes_.at(cur).children) {
        if (retained.contains(child) || forbidden(child)) continue;
        retained.insert(child);
        queue.push_back(child);
      }
    }
  } else {
    log_warn("root category title contains a stopword; cleaned graph is empty");
  }

  CategoryGraph out(*syms_);
  out.root_ = root_;
  for (Symbol id : retained) {
    Node copy;
    const Node& src = nodes_.at(id);
    copy.tokens = src.tokens;
    for (Symbol child : src.children) {
      if (retained.contains(child)) copy.children.push_back(child);
    }
    copy.resources = src.resources;
    out.nodes_.emplace(id, std::move(copy));
  }
  out.finalize();
  return out;
}

bool CategoryGraph::contains(Symbol category) const {
  return nodes_.contains(category);
}

std::span<const Symbol> CategoryGraph::children(Symbol category) const {
  auto it = nodes_.find(category);
  if (it == nodes_.end()) return {};
  return it->second.children;
}

std::span<const Symbol> CategoryGraph::resources(Symbol category) const {
  auto it = nodes_.find(category);
  if (it == nodes_.end()) return {};
  return it->second.resources;
}

const std::vector<std::string>& CategoryGraph::tokens(Symbol category) const {
  static const std::vector<std::string> kEmpty;
  auto it = nodes_.find(category);
  return it == nodes_.end() ? kEmpty : it->second.tokens;
}

std::string CategoryGraph::title(Symbol category) const {
  return join(tokens(category));
}

}  // namespace axmine
