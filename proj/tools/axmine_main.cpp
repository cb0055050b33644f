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

// Command line driver for the axmine pipeline. Deliberately thin: flag
// parsing and exit-code mapping here, everything else behind the C API of
// the shared library.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "axmine.h"

namespace {

// Exit codes: 0 ok, 1 validation error, 2 missing prerequisite, 3 I/O.
int exit_code(axm_status status) {
  switch (status) {
    case AXM_OK: return 0;
    case AXM_MISSING_PREREQUISITE: return 2;
    case AXM_IO_ERROR: return 3;
    default: return 1;
  }
}

struct Options {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

int run_stage(const Options& opts, const std::string& stage) {
  axm_pipeline* pipeline = nullptr;
  axm_status status = axm_pipeline_open(opts.config_path.c_str(), &pipeline);
  if (status != AXM_OK) {
    std::fprintf(stderr, "axmine: cannot load config '%s'\n", opts.config_path.c_str());
    return exit_code(status);
  }
  for (const auto& [key, value] : opts.overrides) {
    status = axm_pipeline_set(pipeline, key.c_str(), value.c_str());
    if (status != AXM_OK) {
      std::fprintf(stderr, "axmine: %s\n", axm_pipeline_last_error(pipeline));
      axm_pipeline_close(pipeline);
      return exit_code(status);
    }
  }
  status = axm_pipeline_run(pipeline, stage.c_str());
  if (status != AXM_OK) {
    std::fprintf(stderr, "axmine: %s\n", axm_pipeline_last_error(pipeline));
  } else {
    std::printf("axmine: stage '%s' done, artifacts in %s\n", stage.c_str(),
                axm_pipeline_out_dir(pipeline));
  }
  axm_pipeline_close(pipeline);
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"axmine: mines category axioms from a category graph and a "
               "background knowledge graph, and materialises new assertions"};
  app.set_version_flag("--version", std::string(axm_version()));

  Options opts;
  std::string tau, functional_threshold, min_set_size, root, stopwords, seed, out;

  app.add_option("--config", opts.config_path, "pipeline config file (JSON)")
      ->envname("AXMINE_CONFIG")
      ->required();
  app.add_option("--tau", tau, "axiom confidence threshold in (0,1)")
      ->envname("AXMINE_TAU");
  app.add_option("--functional-threshold", functional_threshold,
                 "multi-value rate below which a property counts as functional")
      ->envname("AXMINE_FUNCTIONAL_THRESHOLD");
  app.add_option("--min-set-size", min_set_size, "minimum candidate set size")
      ->envname("AXMINE_MIN_SET_SIZE");
  app.add_option("--root", root, "root category id")->envname("AXMINE_ROOT");
  app.add_option("--stopwords", stopwords,
                 "comma separated words removing categories that contain them")
      ->envname("AXMINE_STOPWORDS");
  app.add_option("--seed", seed, "seed for report sampling")->envname("AXMINE_SEED");
  app.add_option("--out", out, "output directory")->envname("AXMINE_OUT");

  const char* stages[] = {"ingest", "build-lex", "candidates", "mine",
                          "apply-patterns", "generate", "report", "all"};
  std::string selected;
  for (const char* stage : stages) {
    CLI::App* sub = app.add_subcommand(stage, std::string("run the ") + stage + " stage");
    sub->callback([&selected, stage] { selected = stage; });
  }
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  auto push = [&](const char* key, const std::string& value) {
    if (!value.empty()) opts.overrides.emplace_back(key, value);
  };
  push("tau", tau);
  push("functional-threshold", functional_threshold);
  push("min-set-size", min_set_size);
  push("root", root);
  push("stopwords", stopwords);
  push("seed", seed);
  push("out", out);

  return run_stage(opts, selected);
}
