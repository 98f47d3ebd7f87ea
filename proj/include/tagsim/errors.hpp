#pragma once

#include <stdexcept>
#include <string>

namespace tagsim {

// Malformed or inconsistent input data (exit code 2 at the CLI).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline stage could not complete (exit code 3 at the CLI).
class StageError : public std::runtime_error {
public:
  StageError(const std::string& stage, const std::string& msg)
      : std::runtime_error("stage '" + stage + "': " + msg), stage_(stage) {}
  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

}  // namespace tagsim
