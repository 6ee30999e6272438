#pragma once

#include <stdexcept>
#include <string>

namespace bh {

// Structured failure.  `kind` is a short stable tag the CLI maps to exit codes.
class MathError : public std::runtime_error {
public:
  MathError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

}  // namespace bh
