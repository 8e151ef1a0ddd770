#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace foldcalc {

// Shared failure type for all modules. `kind` is a stable machine-readable
// tag (for example "PatternNotRecognized"); what() carries the explanation.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace foldcalc
