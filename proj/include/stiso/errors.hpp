#pragma once

#include <stdexcept>

namespace stiso {

// Status taxonomy shared by the C API and the CLI. A decision rule whose
// hypothesis fails is reported as undecided, never as a negative verdict.
enum class Status : int {
  ok = 0,
  usage = 2,
  undecided = 3,
  internal = 4,
};

/// Malformed descriptor or request: wrong dimensions, zero form entries,
/// a composite number where a prime is required, unparsable payloads.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decision procedure's hypothesis does not hold for the input.
class hypothesis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (enumeration cap) was exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stiso
