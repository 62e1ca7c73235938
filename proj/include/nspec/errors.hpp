#pragma once

#include <stdexcept>
#include <string>

namespace nspec {

/// A hypothesis of a formula does not hold for the given input (CLI exit 1).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or JSON support (CLI exit 2).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

/// Two independent computation routes disagree, or an internal identity
/// failed (CLI exit 3).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nspec
