// Tails of the pentagonal number series divided by partition products.

#ifndef PENTATAIL_TAILS_HPP
#define PENTATAIL_TAILS_HPP

#include <optional>

#include "pentatail/partitions.hpp"
#include "pentatail/polya.hpp"
#include "pentatail/series.hpp"

namespace pentatail {

/// Pentagonal tail from index k divided by (1-q^alpha)(1-q^beta)(1-q^gamma).
Series tp_series(const Triple& t, int k, int order);

/// Pentagonal tail from index k divided by (q;q)_infinity.
Series gp_series(int k, int order);

/// sum_{n>=k} q^{binom(k,2)+(k+1)n} / (q;q)_n * [n-1 choose k-1]_q.
Series mk_series(int k, int order);

/// Number of partitions of n whose least missing part is k and which have
/// more parts larger than k than parts smaller than k. Exhaustive
/// enumeration; throws LimitExceeded when n > cap.
Integer mk_bruteforce(int k, int n, int cap = kDefaultEnumerationCap);

struct IdentityCheck {
  bool holds = true;
  /// First exponent at which the two sides differ.
  std::optional<int> first_mismatch;
};

/// Compares the first k pentagonal terms over (q;q)_infinity against
/// 1 + (-1)^{k-1} mk_series(k) through the given order.
IdentityCheck check_am_identity(int k, int order);

/// Coefficientwise comparison of two series through min order.
IdentityCheck compare_series(const Series& lhs, const Series& rhs);

}  // namespace pentatail

#endif  // PENTATAIL_TAILS_HPP
