/* Copyright 2026 The Axmine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Public C interface of the axmine shared library.
 *
 * axmine mines per-category relation and type axioms from a category graph
 * plus a background knowledge graph, and materialises new assertions with
 * consistency post-filtering. The pipeline is driven through an opaque
 * handle: open a pipeline from a JSON config file, optionally override
 * single options, then run named stages. Every function that can fail
 * returns an axm_status; a human-readable message for the most recent
 * failure is kept per handle.
 */

#ifndef AXMINE_H_
#define AXMINE_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef enum axm_status {
  AXM_OK = 0,
  AXM_VALIDATION_ERROR = 1,   /* bad config value, unreadable input, bad data */
  AXM_MISSING_PREREQUISITE = 2, /* required artifact of an earlier stage absent */
  AXM_IO_ERROR = 3,           /* filesystem failure while reading/writing */
  AXM_INVALID_ARGUMENT = 4,   /* null handle, unknown option key or stage name */
  AXM_INTERNAL_ERROR = 5
} axm_status;

typedef struct axm_pipeline axm_pipeline;

/* Library version as "major.minor.patch". Static storage, never freed. */
const char* axm_version(void);

/* Parses the JSON config at config_path and returns a new pipeline handle
 * in *out. On failure *out is set to NULL; there is no handle to query, so
 * the cause is only reflected in the returned status. */
axm_status axm_pipeline_open(const char* config_path, axm_pipeline** out);

/* Overrides a single config option. Keys mirror the CLI flags: "tau",
 * "functional-threshold", "min-set-size", "root", "stopwords" (comma
 * separated), "seed", "out". Values are parsed and range-checked when the
 * next stage runs. */
axm_status axm_pipeline_set(axm_pipeline* p, const char* key, const char* value);

/* Runs one stage: "ingest", "build-lex", "candidates", "mine",
 * "apply-patterns", "generate", "report", or "all". Stage artifacts are
 * written atomically into the configured output directory. */
axm_status axm_pipeline_run(axm_pipeline* p, const char* stage);

/* Message for the most recent failure on this handle, or "" if none.
 * Valid until the next call on the same handle. */
const char* axm_pipeline_last_error(const axm_pipeline* p);

/* Resolved output directory of the pipeline. Valid while the handle lives. */
const char* axm_pipeline_out_dir(const axm_pipeline* p);

void axm_pipeline_close(axm_pipeline* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AXMINE_H_ */
