#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stiso/errors.hpp"
#include "stiso/lattice.hpp"

namespace stiso {

inline constexpr const char* kEngineName = "stiso";
inline constexpr const char* kEngineVersion = "0.1.0";

struct EngineOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  bool trace = false;
};

struct RunResult {
  Status status = Status::ok;
  nlohmann::ordered_json response;
};

/// Dispatches one request document {"command": ..., "payload": {...}} to the
/// matching decision procedure. Never throws: failures are reported in the
/// response's error object and in the status.
RunResult run_request(const nlohmann::ordered_json& request, const EngineOptions& options);

/// Same, from serialized text.
RunResult run_request_text(std::string_view request_json, const EngineOptions& options);

/// Newline-delimited request stream; emits one response per line, order
/// preserving. A failing request yields an error record and the stream
/// continues. Returns the number of requests processed.
std::size_t run_batch(std::istream& in, std::ostream& out, const EngineOptions& options);

}  // namespace stiso
