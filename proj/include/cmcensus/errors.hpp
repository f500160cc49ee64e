#pragma once

#include <stdexcept>
#include <string>

namespace cmcensus {

/// A configured resource ceiling (scan box, sieve size, list regime) was exceeded.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed, or a construction invariant failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmcensus
