#pragma once

#include <stdexcept>
#include <string>

namespace slnet {

// Error categories map 1:1 onto CLI exit codes (see tools/).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CheckpointError : std::runtime_error {
  explicit CheckpointError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal contract violations (shape mismatches, bad arguments).
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace slnet
