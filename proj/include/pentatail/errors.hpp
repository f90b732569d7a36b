#ifndef PENTATAIL_ERRORS_HPP
#define PENTATAIL_ERRORS_HPP

#include <stdexcept>

namespace pentatail {

/// A request exceeded a configured resource cap (enumeration size,
/// truncation order). The computation was refused, not truncated.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (periodicity, integrality). Indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pentatail

#endif  // PENTATAIL_ERRORS_HPP
