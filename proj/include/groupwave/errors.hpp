#pragma once

#include <stdexcept>
#include <string>

namespace groupwave {

/// Malformed configuration input (bad JSON, unknown or unparsable fields).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates a domain contract: mixed groups,
/// a character applied to the wrong group, a grid too small to be
/// conclusive, and the like.
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groupwave
