#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddseq {

// Malformed arguments: mismatched arities, bad moduli, non-units, etc.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not follow the polynomial or group-literal grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or computation would exceed a configured bound.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold failed to; indicates a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  std::uint64_t max_elements = 1'000'000;
  std::uint64_t max_subgroups = 10'000;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace ddseq
