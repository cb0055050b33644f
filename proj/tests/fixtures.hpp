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

#ifndef AXMINE_TESTS_FIXTURES_HPP_
#define AXMINE_TESTS_FIXTURES_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "category_graph.hpp"
#include "kg_store.hpp"
#include "lexicalisation.hpp"
#include "pattern_mining.hpp"
#include "pipeline.hpp"

namespace axtest {

struct RawObject {
  bool is_literal = false;
  std::string value;
  std::string datatype;  // empty, datatype IRI, or "@lang"

  bool operator==(const RawObject&) const = default;
  auto operator<=>(const RawObject&) const = default;
};

RawObject res(std::string value);
RawObject lit(std::string value, std::string datatype = "");

struct RawTriple {
  std::string subject;
  std::string property;
  RawObject object;
};

// Everything a pipeline run consumes, as plain strings. Serialises to the
// on-disk input formats and loads through the real loaders, so fixtures and
// random instances drive the same code paths as production data.
struct Dataset {
  std::vector<RawTriple> facts;
  std::vector<std::pair<std::string, std::string>> types;     // resource, type
  std::vector<std::pair<std::string, std::string>> subclass;  // sub, super
  std::vector<std::pair<std::string, std::string>> disjoint;
  std::vector<std::pair<std::string, std::string>> edges;    // parent, child
  std::vector<std::pair<std::string, std::string>> members;  // category, resource
  std::vector<std::tuple<std::string, std::string, long long>> resource_lex;
  std::vector<std::tuple<std::string, std::string, long long>> type_word_lex;
  std::vector<std::pair<std::string, std::string>> articles;  // resource, sentence
  std::string root = std::string(axmine::kDefaultRootCategory);
  std::vector<std::string> stopwords = axmine::kDefaultStopwords;
  double tau = 0.05;
  double functional_threshold = 0.05;
  int min_set_size = 2;
  uint64_t seed = 7;
  std::string universal_type = std::string(axmine::kOwlThingIri);

  std::string facts_nt() const;
  std::string types_nt() const;
  std::string subclass_nt() const;
  std::string disjoint_nt() const;
  std::string edges_tsv() const;
  std::string members_tsv() const;
  std::string resource_lex_tsv() const;
  std::string type_word_lex_tsv() const;
  std::string articles_tsv() const;

  // Writes all inputs plus a config file into dir; returns the config path.
  // The configured output directory is dir/out.
  std::string write_inputs(const std::filesystem::path& dir) const;
};

// The dataset loaded through the real module loaders. The type store comes
// from type_word_lex when non-empty, otherwise from the article corpus.
struct Loaded {
  axmine::SymbolTable syms;
  std::optional<axmine::KgIndex> kg;
  std::optional<axmine::OntologyIndex> ontology;
  std::optional<axmine::CategoryGraph> raw_graph;
  std::optional<axmine::CategoryGraph> graph;  // cleaned
  std::optional<axmine::LexStore> resource_lex;
  std::optional<axmine::LexStore> type_lex;

  axmine::ScoringContext ctx() const {
    return axmine::ScoringContext{syms,     *kg,           *graph,
                                  *ontology, *resource_lex, *type_lex};
  }
};

std::unique_ptr<Loaded> load_dataset(const Dataset& d);

// Category of 24 albums: 22 typed Album, 22 with an artist fact and 11 with
// a rock-and-roll genre fact. Ids used by tests.
struct BeatlesFixture {
  Dataset data;
  std::string category = "The_Beatles_albums";
  std::string artist_prop = "artist";
  std::string genre_prop = "genre";
  std::string type_album = "Album";
  std::string beatles = "The_Beatles";
  std::string rock_and_roll = "Rock_and_roll";
};
BeatlesFixture beatles_fixture();

// Ambiguous surface form with three named owners plus filler owners; the
// named owner holds 137 of 357 total counts.
Dataset lennon_fixture();

// Two-parent album corpus: 143 children grouped by artist and 45 by genre
// (including a 50-member reggae category, 37 members with the genre fact),
// article rows that teach the word "albums" for the Album type, and an
// Album <= MusicalWork <= Work chain.
struct AlbumsFixture {
  Dataset data;
  std::string artist_parent = "Albums_by_artist";
  std::string genre_parent = "Albums_by_genre";
  std::string beatles_category = "The_Beatles_albums";
  std::string reggae_category = "Reggae_albums";
  std::string artist_prop = "artist";
  std::string genre_prop = "genre";
  std::string type_album = "Album";
  std::string reggae = "Reggae";
};
AlbumsFixture albums_fixture();

// Unique temp directory for a test; removed by the destructor.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);

}  // namespace axtest

#endif  // AXMINE_TESTS_FIXTURES_HPP_
