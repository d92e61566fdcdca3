#include "stiso.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "stiso/engine.hpp"

struct stiso_engine {
  stiso::EngineOptions options;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* stiso_version(void) { return stiso::kEngineVersion; }

stiso_engine* stiso_engine_new(void) { return new (std::nothrow) stiso_engine(); }

void stiso_engine_free(stiso_engine* engine) { delete engine; }

int stiso_engine_set_enumeration_cap(stiso_engine* engine, const char* decimal_cap) {
  if (engine == nullptr) return STISO_ERR_USAGE;
  engine->last_error.clear();
  if (decimal_cap == nullptr) {
    engine->last_error = "enumeration cap: null argument";
    return STISO_ERR_USAGE;
  }
  try {
    stiso::Int cap(decimal_cap);
    if (cap < 1 || cap > stiso::Int(SIZE_MAX)) throw std::runtime_error("out of range");
    engine->options.enumeration_cap = static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    engine->last_error =
        std::string("enumeration cap: expected a positive decimal integer, got \"") +
        decimal_cap + "\"";
    return STISO_ERR_USAGE;
  }
  return STISO_OK;
}

void stiso_engine_set_trace(stiso_engine* engine, int enabled) {
  if (engine != nullptr) engine->options.trace = enabled != 0;
}

int stiso_run(stiso_engine* engine, const char* request_json, char** response) {
  if (response != nullptr) *response = nullptr;
  if (engine == nullptr) return STISO_ERR_USAGE;
  engine->last_error.clear();
  if (request_json == nullptr) {
    engine->last_error = "run: null request";
    return STISO_ERR_USAGE;
  }
  try {
    stiso::RunResult result = stiso::run_request_text(request_json, engine->options);
    if (result.response.contains("error"))
      engine->last_error = result.response["error"]["message"].get<std::string>();
    if (response != nullptr) *response = dup_string(result.response.dump());
    return static_cast<int>(result.status);
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return STISO_ERR_INTERNAL;
  }
}

const char* stiso_last_error(const stiso_engine* engine) {
  return engine == nullptr ? "" : engine->last_error.c_str();
}

void stiso_string_free(char* text) { std::free(text); }

}  // extern "C"
