#pragma once

#include <stdexcept>
#include <string>

namespace starclt {

/// Malformed or out-of-domain user input (bad weights, bad cycle text, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request whose enumeration size exceeds the configured guard.
class InfeasibleError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Largest ground-set size any enumeration accepts.
inline constexpr int kMaxEnumerationOrder = 14;

}  // namespace starclt
