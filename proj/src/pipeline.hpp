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

#ifndef AXMINE_PIPELINE_HPP_
#define AXMINE_PIPELINE_HPP_

#include <string>
#include <vector>

#include "assertion_generation.hpp"
#include "pattern_application.hpp"

namespace axmine {

inline constexpr std::string_view kAxmineVersion = "0.1.0";

// Stage artifact file names inside the output directory.
namespace artifact {
inline constexpr std::string_view kCategories = "categories.tsv";
inline constexpr std::string_view kCategoryEdges = "category_edges.tsv";
inline constexpr std::string_view kCategoryMembers = "category_members.tsv";
inline constexpr std::string_view kFunctionalProperties = "functional_properties.tsv";
inline constexpr std::string_view kLoadReport = "load_report.txt";
inline constexpr std::string_view kTypeLexicalisations = "type_lexicalisations.tsv";
inline constexpr std::string_view kCandidateSets = "candidate_sets.tsv";
inline constexpr std::string_view kPatterns = "patterns.tsv";
inline constexpr std::string_view kAxioms = "axioms.tsv";
inline constexpr std::string_view kAxiomCandidates = "axiom_candidates.tsv";
inline constexpr std::string_view kNovelAssertions = "assertions_novel.nt";
inline constexpr std::string_view kFilteredAssertions = "assertions_filtered.tsv";
inline constexpr std::string_view kAssertionSummary = "assertions_summary.txt";
inline constexpr std::string_view kReport = "report.txt";
}  // namespace artifact

struct PipelineConfig {
  std::string facts_path;
  std::string instance_types_path;
  std::string subclass_path;
  std::string disjointness_path;
  std::string category_edges_path;
  std::string category_membership_path;
  std::string resource_lex_path;
  std::string articles_path;
  double tau = 0.05;
  double functional_threshold = 0.05;
  int min_set_size = 2;
  std::string root = std::string(kDefaultRootCategory);
  std::vector<std::string> stopwords = kDefaultStopwords;
  uint64_t seed = 7;
  std::string out_dir = "out";
  std::string universal_type = std::string(kOwlThingIri);

  static PipelineConfig from_json_file(const std::string& path);

  // Keys mirror the CLI flags: tau, functional-threshold, min-set-size,
  // root, stopwords (comma separated), seed, out. Throws on unknown keys or
  // unparseable numbers.
  void apply_override(const std::string& key, const std::string& value);

  // Range checks plus readability of every configured input path.
  void validate() const;
};

// Runs pipeline stages against the configured inputs and output directory.
// Each stage persists its artifacts atomically (write + rename) and later
// stages reload them from disk, so stages can be re-run individually.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  // "ingest", "build-lex", "candidates", "mine", "apply-patterns",
  // "generate", "report", or "all". Throws Error on failure.
  void run(const std::string& stage);

  const PipelineConfig& config() const { return config_; }
  std::string artifact_path(std::string_view name) const;

  static const std::vector<std::string>& stage_names();

 private:
  void run_ingest();
  void run_build_lex();
  void run_candidates();
  void run_mine();
  void run_apply_patterns();
  void run_generate();
  void run_report();

  void require_artifact(std::string_view name, std::string_view producer) const;

  PipelineConfig config_;
};

}  // namespace axmine

#endif  // AXMINE_PIPELINE_HPP_
