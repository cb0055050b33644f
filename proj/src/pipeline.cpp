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

#include "pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "candidate_selection.hpp"
#include "error.hpp"
#include "log.hpp"
#include "pattern_mining.hpp"
#include "text.hpp"

namespace fs = std::filesystem;

namespace axmine {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Status::kIo, "cannot open input file: " + path);
  }
  return in;
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Status::kIo, "cannot open for writing: " + tmp);
    out << content;
    if (!out) throw Error(Status::kIo, "write failed: " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(Status::kIo, "rename failed: " + path + ": " + ec.message());
}

std::string artifact_header(std::string_view stage, std::string_view columns) {
  std::ostringstream os;
  os << "# axmine " << stage << " v" << kAxmineVersion << '\n';
  if (!columns.empty()) os << "# columns: " << columns << '\n';
  return os.str();
}

std::string sorted_symbol_rows(const SymbolTable& syms, std::vector<Symbol> ids) {
  std::sort(ids.begin(), ids.end(),
            [&](Symbol a, Symbol b) { return syms.less(a, b); });
  std::string out;
  for (Symbol id : ids) {
    out += std::string(syms.at(id));
    out += '\n';
  }
  return out;
}

std::string_view axiom_kind_name(PatternKind kind) {
  return kind == PatternKind::kProperty ? "relation" : "type";
}

}  // namespace

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Status::kValidation, "cannot open config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw Error(Status::kValidation, "config is not valid JSON: " + std::string(e.what()));
  }
  PipelineConfig cfg;
  try {
    cfg.facts_path = j.value("facts", cfg.facts_path);
    cfg.instance_types_path = j.value("instance_types", cfg.instance_types_path);
    cfg.subclass_path = j.value("subclass", cfg.subclass_path);
    cfg.disjointness_path = j.value("disjointness", cfg.disjointness_path);
    cfg.category_edges_path = j.value("category_edges", cfg.category_edges_path);
    cfg.category_membership_path =
        j.value("category_membership", cfg.category_membership_path);
    cfg.resource_lex_path =
        j.value("resource_lexicalisations", cfg.resource_lex_path);
    cfg.articles_path = j.value("articles", cfg.articles_path);
    cfg.tau = j.value("tau", cfg.tau);
    cfg.functional_threshold = j.value("functional_threshold", cfg.functional_threshold);
    cfg.min_set_size = j.value("min_set_size", cfg.min_set_size);
    cfg.root = j.value("root", cfg.root);
    if (j.contains("stopwords")) {
      cfg.stopwords = j.at("stopwords").get<std::vector<std::string>>();
    }
    cfg.seed = j.value("seed", cfg.seed);
    cfg.out_dir = j.value("out", cfg.out_dir);
    cfg.universal_type = j.value("universal_type", cfg.universal_type);
  } catch (const std::exception& e) {
    throw Error(Status::kValidation, "bad config value: " + std::string(e.what()));
  }
  return cfg;
}

void PipelineConfig::apply_override(const std::string& key, const std::string& value) {
  try {
    if (key == "tau") {
      tau = std::stod(value);
    } else if (key == "functional-threshold") {
      functional_threshold = std::stod(value);
    } else if (key == "min-set-size") {
      min_set_size = std::stoi(value);
    } else if (key == "root") {
      root = value;
    } else if (key == "stopwords") {
      stopwords.clear();
      size_t start = 0;
      while (start <= value.size()) {
        size_t pos = value.find(',', start);
        size_t end = pos == std::string::npos ? value.size() : pos;
        std::string item(trim(std::string_view(value).substr(start, end - start)));
        if (!item.empty()) stopwords.push_back(item);
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
    } else if (key == "seed") {
      seed = std::stoull(value);
    } else if (key == "out") {
      out_dir = value;
    } else {
      throw std::invalid_argument("unknown option: " + key);
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Status::kValidation, "bad value for option " + key + ": " + value);
  }
}

void PipelineConfig::validate() const {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(Status::kValidation, "tau must be in (0,1)");
  }
  if (!(functional_threshold > 0.0 && functional_threshold <= 1.0)) {
    throw Error(Status::kValidation, "functional-threshold must be in (0,1]");
  }
  if (min_set_size < 2) {
    throw Error(Status::kValidation, "min-set-size must be >= 2");
  }
  if (root.empty()) throw Error(Status::kValidation, "root category id is empty");
  if (out_dir.empty()) throw Error(Status::kValidation, "output directory is empty");
  const std::pair<std::string_view, const std::string*> inputs[] = {
      {"facts", &facts_path},
      {"instance_types", &instance_types_path},
      {"subclass", &subclass_path},
      {"disjointness", &disjointness_path},
      {"category_edges", &category_edges_path},
      {"category_membership", &category_membership_path},
      {"resource_lexicalisations", &resource_lex_path},
      {"articles", &articles_path},
  };
  for (const auto& [name, path] : inputs) {
    if (path->empty()) {
      throw Error(Status::kValidation, "config misses input path: " + std::string(name));
    }
    std::ifstream probe(*path);
    if (!probe) {
      throw Error(Status::kValidation,
                  "input '" + std::string(name) + "' is not readable: " + *path);
    }
  }
}

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {}

const std::vector<std::string>& Pipeline::stage_names() {
  static const std::vector<std::string> kStages = {
      "ingest", "build-lex", "candidates", "mine",
      "apply-patterns", "generate", "report", "all"};
  return kStages;
}

std::string Pipeline::artifact_path(std::string_view name) const {
  return (fs::path(config_.out_dir) / name).string();
}

void Pipeline::require_artifact(std::string_view name, std::string_view producer) const {
  if (!fs::exists(artifact_path(name))) {
    throw Error(Status::kPrerequisite,
                "missing artifact '" + std::string(name) + "'; run stage '" +
                    std::string(producer) + "' first");
  }
}

void Pipeline::run(const std::string& stage) {
  bool known = false;
  for (const std::string& s : stage_names()) known = known || s == stage;
  if (!known) throw std::invalid_argument("unknown stage: " + stage);

  config_.validate();
  std::error_code ec;
  fs::create_directories(config_.out_dir, ec);
  if (ec) {
    throw Error(Status::kIo, "cannot create output directory: " + config_.out_dir);
  }

  if (stage == "all") {
    for (const std::string& s : stage_names()) {
      if (s != "all") run(s);
    }
    return;
  }
  if (stage == "ingest") run_ingest();
  else if (stage == "build-lex") run_build_lex();
  else if (stage == "candidates") run_candidates();
  else if (stage == "mine") run_mine();
  else if (stage == "apply-patterns") run_apply_patterns();
  else if (stage == "generate") run_generate();
  else if (stage == "report") run_report();
}

namespace {

// Shared loading helpers. Stages reload from raw inputs and artifacts so
// every stage can run in a fresh process.

KgIndex load_kg(const PipelineConfig& cfg, SymbolTable& syms,
                std::vector<LoadReport>* reports = nullptr) {
  KgIndex kg(syms);
  auto facts = open_input(cfg.facts_path);
  LoadReport r1 = kg.load_ntriples(facts, "facts");
  auto types = open_input(cfg.instance_types_path);
  LoadReport r2 = kg.load_ntriples(types, "instance_types");
  kg.finalize();
  if (reports) {
    reports->push_back(r1);
    reports->push_back(r2);
  }
  return kg;
}

OntologyIndex load_ontology(const PipelineConfig& cfg, SymbolTable& syms,
                            std::vector<LoadReport>* reports = nullptr) {
  OntologyIndex ontology(syms);
  ontology.set_universal_root(cfg.universal_type);
  auto subclass = open_input(cfg.subclass_path);
  LoadReport r1 = ontology.load_subclass_ntriples(subclass, "subclass");
  auto disjoint = open_input(cfg.disjointness_path);
  LoadReport r2 = ontology.load_disjoint_ntriples(disjoint, "disjointness");
  ontology.finalize();
  if (reports) {
    reports->push_back(r1);
    reports->push_back(r2);
  }
  return ontology;
}

// Reads back the cleaned graph persisted by ingest; no re-cleaning.
CategoryGraph load_graph_artifacts(const Pipeline& p, const PipelineConfig& cfg,
                                   SymbolTable& syms) {
  CategoryGraph g(syms);
  g.set_root(cfg.root);
  std::string line;
  auto nodes = open_input(p.artifact_path(artifact::kCategories));
  while (std::getline(nodes, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    g.add_node(sv);
  }
  auto edges = open_input(p.artifact_path(artifact::kCategoryEdges));
  while (std::getline(edges, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() == 2) g.add_edge(fields[0], fields[1]);
  }
  auto members = open_input(p.artifact_path(artifact::kCategoryMembers));
  while (std::getline(members, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() == 2) g.add_member(fields[0], fields[1]);
  }
  g.finalize();
  return g;
}

LexStore load_resource_lex(const PipelineConfig& cfg, SymbolTable& syms) {
  auto in = open_input(cfg.resource_lex_path);
  return LexStore::load_tsv(in, syms, LexGranularity::kPhrase);
}

LexStore load_type_lex_artifact(const Pipeline& p, SymbolTable& syms) {
  auto in = open_input(p.artifact_path(artifact::kTypeLexicalisations));
  return LexStore::load_tsv(in, syms, LexGranularity::kWord);
}

std::vector<CandidateSet> load_candidate_sets_artifact(const Pipeline& p,
                                                       SymbolTable& syms) {
  std::vector<CandidateSet> sets;
  auto in = open_input(p.artifact_path(artifact::kCandidateSets));
  std::string line;
  std::string cur_parent, cur_prefix, cur_postfix;
  bool have_current = false;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 5) continue;
    if (!have_current || fields[0] != cur_parent || fields[1] != cur_prefix ||
        fields[2] != cur_postfix) {
      CandidateSet set;
      set.parent = syms.intern(fields[0]);
      set.prefix = split_ws(fields[1]);
      set.postfix = split_ws(fields[2]);
      sets.push_back(std::move(set));
      cur_parent = fields[0];
      cur_prefix = fields[1];
      cur_postfix = fields[2];
      have_current = true;
    }
    CandidateMember m;
    m.category = syms.intern(fields[3]);
    m.variable = split_ws(fields[4]);
    sets.back().members.push_back(std::move(m));
  }
  return sets;
}

std::vector<Axiom> load_axioms_artifact(const std::string& path, SymbolTable& syms) {
  std::vector<Axiom> axioms;
  auto in = open_input(path);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 5) continue;
    Axiom a;
    a.category = syms.intern(fields[0]);
    a.kind = fields[1] == "relation" ? PatternKind::kProperty : PatternKind::kType;
    a.implication = syms.intern(fields[2]);
    if (a.kind == PatternKind::kProperty) {
      if (!parse_nt_object_term(fields[3], syms, &a.value)) {
        log_warn("axiom row with unparseable value skipped: " + fields[3]);
        continue;
      }
    }
    a.confidence = std::strtod(fields[4].c_str(), nullptr);
    axioms.push_back(a);
  }
  return axioms;
}

std::unordered_set<Symbol> load_functional_artifact(const Pipeline& p,
                                                    SymbolTable& syms) {
  std::unordered_set<Symbol> out;
  auto in = open_input(p.artifact_path(artifact::kFunctionalProperties));
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    out.insert(syms.intern(sv));
  }
  return out;
}

std::string axioms_to_tsv(const SymbolTable& syms, const std::vector<Axiom>& axioms,
                          std::string_view stage) {
  std::string out = artifact_header(stage, "category kind property-or-type value-or-empty confidence");
  for (const Axiom& a : axioms) {
    out += std::string(syms.at(a.category)) + "\t" +
           std::string(axiom_kind_name(a.kind)) + "\t" +
           std::string(syms.at(a.implication)) + "\t";
    if (a.kind == PatternKind::kProperty) out += nt_term(syms, a.value);
    out += "\t" + format_double(a.confidence) + "\n";
  }
  return out;
}

}  // namespace

void Pipeline::run_ingest() {
  SymbolTable syms;
  std::vector<LoadReport> reports;
  KgIndex kg = load_kg(config_, syms, &reports);
  OntologyIndex ontology = load_ontology(config_, syms, &reports);
  (void)ontology;  // loaded here to fail fast on cyclic hierarchies

  auto edges_in = open_input(config_.category_edges_path);
  auto members_in = open_input(config_.category_membership_path);
  CategoryGraph raw = CategoryGraph::load(edges_in, members_in, syms, config_.root);
  CategoryGraph graph = raw.cleaned(config_.stopwords);

  std::string categories = artifact_header("ingest", "category");
  {
    std::vector<Symbol> ids(graph.categories().begin(), graph.categories().end());
    categories += sorted_symbol_rows(syms, ids);
  }
  atomic_write(artifact_path(artifact::kCategories), categories);

  std::string edge_rows = artifact_header("ingest", "parent child");
  for (Symbol parent : graph.categories()) {
    for (Symbol child : graph.children(parent)) {
      edge_rows += std::string(syms.at(parent)) + "\t" +
                   std::string(syms.at(child)) + "\n";
    }
  }
  atomic_write(artifact_path(artifact::kCategoryEdges), edge_rows);

  std::string member_rows = artifact_header("ingest", "category resource");
  for (Symbol cat : graph.categories()) {
    auto span = graph.resources(cat);
    std::vector<Symbol> resources(span.begin(), span.end());
    std::sort(resources.begin(), resources.end(),
              [&](Symbol a, Symbol b) { return syms.less(a, b); });
    for (Symbol r : resources) {
      member_rows += std::string(syms.at(cat)) + "\t" + std::string(syms.at(r)) + "\n";
    }
  }
  atomic_write(artifact_path(artifact::kCategoryMembers), member_rows);

  std::string functional = artifact_header("ingest", "property");
  for (Symbol p : kg.detect_functional_properties(config_.functional_threshold)) {
    functional += std::string(syms.at(p)) + "\n";
  }
  atomic_write(artifact_path(artifact::kFunctionalProperties), functional);

  std::ostringstream report;
  report << artifact_header("ingest", "");
  for (const LoadReport& r : reports) report << r.to_text() << '\n';
  report << "category graph: " << raw.node_count() << " categories loaded, "
         << graph.node_count() << " retained after cleaning\n"
         << "resource universe: " << graph.resource_universe_size() << " resources\n"
         << "knowledge graph: " << kg.triple_count() << " distinct triples\n";
  atomic_write(artifact_path(artifact::kLoadReport), report.str());
  log_info("ingest: " + std::to_string(graph.node_count()) + " categories retained");
}

void Pipeline::run_build_lex() {
  SymbolTable syms;
  KgIndex kg = load_kg(config_, syms);
  LexStore resource_lex = load_resource_lex(config_, syms);
  auto articles = open_input(config_.articles_path);
  LexStore type_lex = build_type_lexicalisations(kg, resource_lex, articles, syms);

  std::ostringstream out;
  out << artifact_header("build-lex", "type word count");
  type_lex.write_tsv(out);
  atomic_write(artifact_path(artifact::kTypeLexicalisations), out.str());
  log_info("build-lex: " + std::to_string(type_lex.entry_count()) +
           " type/word count entries");
}

void Pipeline::run_candidates() {
  require_artifact(artifact::kCategories, "ingest");
  require_artifact(artifact::kCategoryEdges, "ingest");
  require_artifact(artifact::kCategoryMembers, "ingest");
  SymbolTable syms;
  CategoryGraph graph = load_graph_artifacts(*this, config_, syms);
  std::vector<CandidateSet> sets = build_candidate_sets(graph, config_.min_set_size);

  std::string out = artifact_header("candidates", "parent prefix postfix member cvar");
  for (const CandidateSet& set : sets) {
    for (const CandidateMember& m : set.members) {
      out += std::string(syms.at(set.parent)) + "\t" + join(set.prefix) + "\t" +
             join(set.postfix) + "\t" + std::string(syms.at(m.category)) + "\t" +
             join(m.variable) + "\n";
    }
  }
  atomic_write(artifact_path(artifact::kCandidateSets), out);
  log_info("candidates: " + std::to_string(sets.size()) + " candidate sets");
}

void Pipeline::run_mine() {
  require_artifact(artifact::kCandidateSets, "candidates");
  require_artifact(artifact::kTypeLexicalisations, "build-lex");
  require_artifact(artifact::kCategoryMembers, "ingest");
  SymbolTable syms;
  KgIndex kg = load_kg(config_, syms);
  OntologyIndex ontology = load_ontology(config_, syms);
  CategoryGraph graph = load_graph_artifacts(*this, config_, syms);
  LexStore resource_lex = load_resource_lex(config_, syms);
  LexStore type_lex = load_type_lex_artifact(*this, syms);
  std::vector<CandidateSet> sets = load_candidate_sets_artifact(*this, syms);

  ScoringContext ctx{syms, kg, graph, ontology, resource_lex, type_lex};
  PatternRegistry registry = mine_patterns(ctx, sets, syms);

  std::ostringstream out;
  out << artifact_header("mine", "prefix postfix kind implication support");
  registry.write_tsv(out);
  atomic_write(artifact_path(artifact::kPatterns), out.str());
  log_info("mine: " + std::to_string(registry.size()) + " patterns");
}

void Pipeline::run_apply_patterns() {
  require_artifact(artifact::kPatterns, "mine");
  require_artifact(artifact::kTypeLexicalisations, "build-lex");
  require_artifact(artifact::kCategoryMembers, "ingest");
  SymbolTable syms;
  KgIndex kg = load_kg(config_, syms);
  OntologyIndex ontology = load_ontology(config_, syms);
  CategoryGraph graph = load_graph_artifacts(*this, config_, syms);
  LexStore resource_lex = load_resource_lex(config_, syms);
  LexStore type_lex = load_type_lex_artifact(*this, syms);
  auto patterns_in = open_input(artifact_path(artifact::kPatterns));
  PatternRegistry registry = PatternRegistry::read_tsv(patterns_in, syms);

  ScoringContext ctx{syms, kg, graph, ontology, resource_lex, type_lex};
  std::vector<Axiom> axioms = apply_patterns(ctx, registry, config_.tau);
  atomic_write(artifact_path(artifact::kAxioms),
               axioms_to_tsv(syms, axioms, "apply-patterns"));

  // Candidate axioms at the report floor threshold; a superset of the
  // accepted axioms used by the confidence-interval report.
  double floor_tau = std::min(0.01, config_.tau);
  std::vector<Axiom> candidates = apply_patterns(ctx, registry, floor_tau);
  atomic_write(artifact_path(artifact::kAxiomCandidates),
               axioms_to_tsv(syms, candidates, "apply-patterns"));
  log_info("apply-patterns: " + std::to_string(axioms.size()) + " axioms at tau " +
           format_double(config_.tau));
}

void Pipeline::run_generate() {
  require_artifact(artifact::kAxioms, "apply-patterns");
  require_artifact(artifact::kCategoryMembers, "ingest");
  require_artifact(artifact::kFunctionalProperties, "ingest");
  SymbolTable syms;
  KgIndex kg = load_kg(config_, syms);
  OntologyIndex ontology = load_ontology(config_, syms);
  CategoryGraph graph = load_graph_artifacts(*this, config_, syms);
  std::vector<Axiom> axioms = load_axioms_artifact(artifact_path(artifact::kAxioms), syms);
  std::unordered_set<Symbol> functional = load_functional_artifact(*this, syms);

  std::vector<Assertion> assertions = apply_axioms(axioms, graph, kg, ontology);
  post_filter_relations(assertions, kg, functional, axioms);
  post_filter_types(assertions, kg, ontology, axioms);

  auto line_of = [&](const Assertion& a) {
    return nt_line(syms, a.subject, a.property, a.object);
  };

  std::vector<std::string> novel_lines;
  std::vector<std::string> filtered_rows;
  for (const Assertion& a : assertions) {
    if (a.status == AssertionStatus::kNovel) {
      novel_lines.push_back(line_of(a));
    } else if (a.status == AssertionStatus::kFilteredFunctional ||
               a.status == AssertionStatus::kFilteredDisjoint) {
      const Axiom& provenance = axioms[a.axiom_index];
      filtered_rows.push_back(std::string(syms.at(a.subject)) + "\t" +
                              std::string(syms.at(a.property)) + "\t" +
                              nt_term(syms, a.object) + "\t" +
                              std::string(assertion_status_name(a.status)) + "\t" +
                              std::string(syms.at(provenance.category)) + "\t" +
                              format_double(provenance.confidence));
    }
  }
  std::sort(novel_lines.begin(), novel_lines.end());
  std::sort(filtered_rows.begin(), filtered_rows.end());

  std::string novel = artifact_header("generate", "");
  for (const std::string& l : novel_lines) novel += l + "\n";
  atomic_write(artifact_path(artifact::kNovelAssertions), novel);

  std::string filtered =
      artifact_header("generate", "subject property object reason category confidence");
  for (const std::string& l : filtered_rows) filtered += l + "\n";
  atomic_write(artifact_path(artifact::kFilteredAssertions), filtered);

  AssertionSummary summary = summarize(assertions);
  atomic_write(artifact_path(artifact::kAssertionSummary),
               artifact_header("generate", "") + summary.to_text());
  log_info("generate: " + std::to_string(summary.generated) + " assertions, " +
           std::to_string(summary.novel_relations + summary.novel_types) + " novel");
}

void Pipeline::run_report() {
  require_artifact(artifact::kAxiomCandidates, "apply-patterns");
  auto in = open_input(artifact_path(artifact::kAxiomCandidates));

  struct Row {
    std::string line;
    double confidence;
  };
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv[0] == '#') continue;
    auto fields = split_tsv(sv);
    if (fields.size() != 5) continue;
    rows.push_back(Row{std::string(sv), std::strtod(fields[4].c_str(), nullptr)});
  }

  // Buckets [0.01,0.02) ... [0.09,0.10) and [0.10,1.00].
  struct Bucket {
    double lo, hi;
    bool closed_hi;
    std::vector<size_t> rows;
  };
  std::vector<Bucket> buckets;
  for (int i = 1; i < 10; ++i) {
    buckets.push_back(Bucket{i / 100.0, (i + 1) / 100.0, false, {}});
  }
  buckets.push_back(Bucket{0.10, 1.00, true, {}});
  for (size_t i = 0; i < rows.size(); ++i) {
    for (Bucket& b : buckets) {
      bool in_bucket = rows[i].confidence >= b.lo &&
                       (b.closed_hi ? rows[i].confidence <= b.hi
                                    : rows[i].confidence < b.hi);
      if (in_bucket) {
        b.rows.push_back(i);
        break;
      }
    }
  }

  constexpr size_t kSampleSize = 50;
  std::ostringstream os;
  os << artifact_header("report", "");
  os << "# seed: " << config_.seed << "\n";
  os << "# tau: " << format_double(config_.tau) << "\n";
  os << "# sample size per bucket: " << kSampleSize << "\n";
  os << "bucket\tcount\tsampled\n";
  auto bucket_name = [](const Bucket& b) {
    std::ostringstream name;
    name << (b.closed_hi ? '[' : '[') << format_double(b.lo) << ','
         << format_double(b.hi) << (b.closed_hi ? ']' : ')');
    return name.str();
  };
  for (const Bucket& b : buckets) {
    os << bucket_name(b) << '\t' << b.rows.size() << '\t'
       << std::min(kSampleSize, b.rows.size()) << '\n';
  }
  std::mt19937_64 rng(config_.seed);
  for (size_t bi = 0; bi < buckets.size(); ++bi) {
    const Bucket& b = buckets[bi];
    os << "== samples " << bucket_name(b) << '\n';
    std::vector<size_t> pool = b.rows;
    size_t take = std::min(kSampleSize, pool.size());
    for (size_t i = 0; i < take; ++i) {
      size_t j = i + static_cast<size_t>(rng() % (pool.size() - i));
      std::swap(pool[i], pool[j]);
      os << rows[pool[i]].line << '\n';
    }
  }
  atomic_write(artifact_path(artifact::kReport), os.str());
  log_info("report: " + std::to_string(rows.size()) + " candidate axioms bucketed");
}

}  // namespace axmine
