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

#include "axmine.h"

#include <new>
#include <string>

#include "error.hpp"
#include "pipeline.hpp"

// The handle wraps the configured pipeline plus the last error message.
struct axm_pipeline {
  axmine::PipelineConfig config;
  std::string last_error;
};

namespace {

axm_status status_of(const axmine::Error& e) {
  switch (e.status()) {
    case axmine::Status::kValidation: return AXM_VALIDATION_ERROR;
    case axmine::Status::kPrerequisite: return AXM_MISSING_PREREQUISITE;
    case axmine::Status::kIo: return AXM_IO_ERROR;
    default: return AXM_INTERNAL_ERROR;
  }
}

template <typename Fn>
axm_status guarded(axm_pipeline* p, Fn&& fn) {
  p->last_error.clear();
  try {
    fn();
    return AXM_OK;
  } catch (const axmine::Error& e) {
    p->last_error = e.what();
    return status_of(e);
  } catch (const std::invalid_argument& e) {
    p->last_error = e.what();
    return AXM_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    p->last_error = e.what();
    return AXM_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* axm_version(void) {
  static const std::string version(axmine::kAxmineVersion);
  return version.c_str();
}

axm_status axm_pipeline_open(const char* config_path, axm_pipeline** out) {
  if (out == nullptr) return AXM_INVALID_ARGUMENT;
  *out = nullptr;
  if (config_path == nullptr) return AXM_INVALID_ARGUMENT;
  auto* handle = new (std::nothrow) axm_pipeline();
  if (handle == nullptr) return AXM_INTERNAL_ERROR;
  axm_status status = guarded(handle, [&] {
    handle->config = axmine::PipelineConfig::from_json_file(config_path);
  });
  if (status != AXM_OK) {
    delete handle;
    return status;
  }
  *out = handle;
  return AXM_OK;
}

axm_status axm_pipeline_set(axm_pipeline* p, const char* key, const char* value) {
  if (p == nullptr || key == nullptr || value == nullptr) return AXM_INVALID_ARGUMENT;
  return guarded(p, [&] { p->config.apply_override(key, value); });
}

axm_status axm_pipeline_run(axm_pipeline* p, const char* stage) {
  if (p == nullptr || stage == nullptr) return AXM_INVALID_ARGUMENT;
  return guarded(p, [&] {
    axmine::Pipeline pipeline(p->config);
    pipeline.run(stage);
  });
}

const char* axm_pipeline_last_error(const axm_pipeline* p) {
  if (p == nullptr) return "";
  return p->last_error.c_str();
}

const char* axm_pipeline_out_dir(const axm_pipeline* p) {
  if (p == nullptr) return "";
  return p->config.out_dir.c_str();
}

void axm_pipeline_close(axm_pipeline* p) { delete p; }

}  // extern "C"
