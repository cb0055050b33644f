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

#include "fixtures.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include "text.hpp"

namespace axtest {

namespace {

std::string nt_object(const RawObject& o) {
  if (!o.is_literal) return "<" + o.value + ">";
  std::string out = "\"" + axmine::nt_escape(o.value) + "\"";
  if (!o.datatype.empty()) {
    if (o.datatype[0] == '@') {
      out += o.datatype;
    } else {
      out += "^^<" + o.datatype + ">";
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

}  // namespace

RawObject res(std::string value) { return RawObject{false, std::move(value), ""}; }

RawObject lit(std::string value, std::string datatype) {
  return RawObject{true, std::move(value), std::move(datatype)};
}

std::string Dataset::facts_nt() const {
  std::string out;
  for (const RawTriple& t : facts) {
    out += "<" + t.subject + "> <" + t.property + "> " + nt_object(t.object) + " .\n";
  }
  return out;
}

std::string Dataset::types_nt() const {
  std::string out;
  for (const auto& [r, t] : types) {
    out += "<" + r + "> <" + std::string(axmine::kRdfTypeIri) + "> <" + t + "> .\n";
  }
  return out;
}

std::string Dataset::subclass_nt() const {
  std::string out;
  for (const auto& [sub, super] : subclass) {
    out += "<" + sub + "> <" + std::string(axmine::kRdfsSubClassOfIri) + "> <" +
           super + "> .\n";
  }
  return out;
}

std::string Dataset::disjoint_nt() const {
  std::string out;
  for (const auto& [a, b] : disjoint) {
    out += "<" + a + "> <" + std::string(axmine::kOwlDisjointWithIri) + "> <" + b +
           "> .\n";
  }
  return out;
}

std::string Dataset::edges_tsv() const {
  std::string out;
  for (const auto& [p, c] : edges) out += p + "\t" + c + "\n";
  return out;
}

std::string Dataset::members_tsv() const {
  std::string out;
  for (const auto& [c, r] : members) out += c + "\t" + r + "\n";
  return out;
}

std::string Dataset::resource_lex_tsv() const {
  std::string out;
  for (const auto& [r, phrase, count] : resource_lex) {
    out += r + "\t" + phrase + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::string Dataset::type_word_lex_tsv() const {
  std::string out;
  for (const auto& [t, word, count] : type_word_lex) {
    out += t + "\t" + word + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::string Dataset::articles_tsv() const {
  std::string out;
  for (const auto& [r, sentence] : articles) out += r + "\t" + sentence + "\n";
  return out;
}

std::string Dataset::write_inputs(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  write_file(dir / "facts.nt", facts_nt());
  write_file(dir / "instance_types.nt", types_nt());
  write_file(dir / "subclass.nt", subclass_nt());
  write_file(dir / "disjointness.nt", disjoint_nt());
  write_file(dir / "edges.tsv", edges_tsv());
  write_file(dir / "membership.tsv", members_tsv());
  write_file(dir / "resource_lex.tsv", resource_lex_tsv());
  write_file(dir / "articles.tsv", articles_tsv());

  std::ostringstream cfg;
  cfg << "{\n";
  auto path_of = [&](const char* name) { return (dir / name).string(); };
  cfg << "  \"facts\": \"" << path_of("facts.nt") << "\",\n";
  cfg << "  \"instance_types\": \"" << path_of("instance_types.nt") << "\",\n";
  cfg << "  \"subclass\": \"" << path_of("subclass.nt") << "\",\n";
  cfg << "  \"disjointness\": \"" << path_of("disjointness.nt") << "\",\n";
  cfg << "  \"category_edges\": \"" << path_of("edges.tsv") << "\",\n";
  cfg << "  \"category_membership\": \"" << path_of("membership.tsv") << "\",\n";
  cfg << "  \"resource_lexicalisations\": \"" << path_of("resource_lex.tsv") << "\",\n";
  cfg << "  \"articles\": \"" << path_of("articles.tsv") << "\",\n";
  cfg << "  \"tau\": " << axmine::format_double(tau) << ",\n";
  cfg << "  \"functional_threshold\": " << axmine::format_double(functional_threshold)
      << ",\n";
  cfg << "  \"min_set_size\": " << min_set_size << ",\n";
  cfg << "  \"root\": \"" << root << "\",\n";
  cfg << "  \"stopwords\": [";
  for (size_t i = 0; i < stopwords.size(); ++i) {
    cfg << (i ? ", " : "") << '"' << stopwords[i] << '"';
  }
  cfg << "],\n";
  cfg << "  \"seed\": " << seed << ",\n";
  cfg << "  \"universal_type\": \"" << universal_type << "\",\n";
  cfg << "  \"out\": \"" << (dir / "out").string() << "\"\n";
  cfg << "}\n";
  std::string config_path = (dir / "config.json").string();
  write_file(config_path, cfg.str());
  return config_path;
}

std::unique_ptr<Loaded> load_dataset(const Dataset& d) {
  auto loaded = std::make_unique<Loaded>();
  loaded->kg.emplace(loaded->syms);
  {
    std::istringstream facts(d.facts_nt());
    loaded->kg->load_ntriples(facts, "facts");
    std::istringstream types(d.types_nt());
    loaded->kg->load_ntriples(types, "instance_types");
    loaded->kg->finalize();
  }
  loaded->ontology.emplace(loaded->syms);
  loaded->ontology->set_universal_root(d.universal_type);
  {
    std::istringstream subclass(d.subclass_nt());
    loaded->ontology->load_subclass_ntriples(subclass, "subclass");
    std::istringstream disjoint(d.disjoint_nt());
    loaded->ontology->load_disjoint_ntriples(disjoint, "disjointness");
    loaded->ontology->finalize();
  }
  {
    std::istringstream edges(d.edges_tsv());
    std::istringstream members(d.members_tsv());
    loaded->raw_graph =
        axmine::CategoryGraph::load(edges, members, loaded->syms, d.root);
    // Datasets without a graph still load; give them an empty root node so
    // cleaning has its anchor.
    if (!loaded->raw_graph->contains(loaded->syms.intern(d.root))) {
      loaded->raw_graph->add_node(d.root);
      loaded->raw_graph->finalize();
    }
    loaded->graph = loaded->raw_graph->cleaned(d.stopwords);
  }
  {
    std::istringstream lex(d.resource_lex_tsv());
    loaded->resource_lex =
        axmine::LexStore::load_tsv(lex, loaded->syms, axmine::LexGranularity::kPhrase);
  }
  if (!d.type_word_lex.empty()) {
    std::istringstream lex(d.type_word_lex_tsv());
    loaded->type_lex =
        axmine::LexStore::load_tsv(lex, loaded->syms, axmine::LexGranularity::kWord);
  } else {
    std::istringstream articles(d.articles_tsv());
    loaded->type_lex = axmine::build_type_lexicalisations(
        *loaded->kg, *loaded->resource_lex, articles, loaded->syms);
  }
  return loaded;
}

BeatlesFixture beatles_fixture() {
  BeatlesFixture f;
  Dataset& d = f.data;
  d.edges.emplace_back(d.root, "Albums");
  d.edges.emplace_back("Albums", f.category);
  for (int i = 1; i <= 24; ++i) {
    std::string r = "Beatles_album_" + std::to_string(i);
    d.members.emplace_back(f.category, r);
    if (i <= 22) {
      d.types.emplace_back(r, f.type_album);
      d.facts.push_back(RawTriple{r, f.artist_prop, res(f.beatles)});
    }
    if (i <= 11) {
      d.facts.push_back(RawTriple{r, f.genre_prop, res(f.rock_and_roll)});
    }
  }
  d.resource_lex.emplace_back(f.beatles, "the beatles", 100);
  return f;
}

Dataset lennon_fixture() {
  Dataset d;
  d.resource_lex.emplace_back("John_Lennon", "lennon", 137);
  d.resource_lex.emplace_back("Aaron_Lennon", "lennon", 54);
  d.resource_lex.emplace_back("Lennon_Michigan", "lennon", 14);
  for (int i = 1; i <= 8; ++i) {
    d.resource_lex.emplace_back("Lennon_filler_" + std::to_string(i), "lennon", 19);
  }
  return d;
}

AlbumsFixture albums_fixture() {
  AlbumsFixture f;
  Dataset& d = f.data;

  d.edges.emplace_back(d.root, "Albums");
  d.edges.emplace_back("Albums", f.artist_parent);
  d.edges.emplace_back("Albums", f.genre_parent);

  d.subclass.emplace_back("Album", "MusicalWork");
  d.subclass.emplace_back("MusicalWork", "Work");
  d.subclass.emplace_back("Work", d.universal_type);

  auto pad3 = [](int i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%03d", i);
    return std::string(buf);
  };

  // 143 children of the artist parent: the 24-member category plus 142
  // synthetic two-member categories, each organised by one artist.
  {
    BeatlesFixture b = beatles_fixture();
    d.edges.emplace_back(f.artist_parent, f.beatles_category);
    for (const auto& [c, r] : b.data.members) d.members.emplace_back(c, r);
    for (const auto& t : b.data.facts) d.facts.push_back(t);
    for (const auto& t : b.data.types) d.types.push_back(t);
    for (const auto& row : b.data.resource_lex) d.resource_lex.push_back(row);
  }
  for (int i = 1; i <= 142; ++i) {
    std::string artist = "Artist" + pad3(i) + "_res";
    std::string category = "Artist" + pad3(i) + "_albums";
    d.edges.emplace_back(f.artist_parent, category);
    d.resource_lex.emplace_back(artist, "artist" + pad3(i), 10);
    for (int k = 1; k <= 2; ++k) {
      std::string r = "Artist" + pad3(i) + "_album_" + std::to_string(k);
      d.members.emplace_back(category, r);
      d.types.emplace_back(r, f.type_album);
      d.facts.push_back(RawTriple{r, f.artist_prop, res(artist)});
    }
  }

  // 45 children of the genre parent: the 50-member reggae category (37 with
  // the genre fact) plus 44 synthetic categories.
  d.edges.emplace_back(f.genre_parent, f.reggae_category);
  d.resource_lex.emplace_back(f.reggae, "reggae", 50);
  for (int i = 1; i <= 50; ++i) {
    std::string r = "Reggae_album_" + std::to_string(i);
    d.members.emplace_back(f.reggae_category, r);
    d.types.emplace_back(r, f.type_album);
    if (i <= 37) d.facts.push_back(RawTriple{r, f.genre_prop, res(f.reggae)});
  }
  for (int i = 1; i <= 44; ++i) {
    std::string genre = "Genre" + pad3(i) + "_res";
    std::string category = "Genre" + pad3(i) + "_albums";
    d.edges.emplace_back(f.genre_parent, category);
    d.resource_lex.emplace_back(genre, "genre" + pad3(i), 10);
    for (int k = 1; k <= 2; ++k) {
      std::string r = "Genre" + pad3(i) + "_album_" + std::to_string(k);
      d.members.emplace_back(category, r);
      d.types.emplace_back(r, f.type_album);
      d.facts.push_back(RawTriple{r, f.genre_prop, res(genre)});
    }
  }

  // Article rows that teach the word "albums" for the Album type.
  const std::pair<std::string, std::string> album_phrases[] = {
      {"Beatles_album_1", "please please me"},
      {"Beatles_album_2", "abbey road"},
      {"Reggae_album_1", "exodus"},
      {"Reggae_album_2", "uprising"},
  };
  for (const auto& [r, phrase] : album_phrases) {
    d.resource_lex.emplace_back(r, phrase, 3);
    d.articles.emplace_back(r, phrase + " and other albums");
  }
  return f;
}

namespace {
std::atomic<uint64_t> temp_counter{0};
}

TempDir::TempDir(const std::string& tag) {
  uint64_t n = temp_counter.fetch_add(1);
  path_ = std::filesystem::temp_directory_path() /
          ("axmine_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(n));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace axtest
