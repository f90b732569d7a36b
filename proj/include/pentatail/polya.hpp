// Partitions into three pairwise coprime parts: the counting series R(n) and
// its decomposition into a quadratic main term plus a centred periodic part.

#ifndef PENTATAIL_POLYA_HPP
#define PENTATAIL_POLYA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pentatail/series.hpp"

namespace pentatail {

/// Distinct, pairwise coprime positive parts (alpha, beta, gamma).
class Triple {
 public:
  /// Throws std::invalid_argument unless the parts are positive, distinct and
  /// pairwise coprime.
  Triple(int alpha, int beta, int gamma);

  int alpha() const { return parts_[0]; }
  int beta() const { return parts_[1]; }
  int gamma() const { return parts_[2]; }
  const std::array<int, 3>& parts() const { return parts_; }
  bool contains(int part) const;
  std::int64_t product() const;
  std::int64_t sum() const { return parts_[0] + parts_[1] + parts_[2]; }
  /// "(a,b,c)"
  std::string to_string() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<int, 3> parts_;
};

/// R(n) = a n^2 + b n + c + periodic_table[n mod period], with the periodic
/// part centred so that its max and min are +b_f and -b_f.
struct QuadraticProfile {
  Triple triple;
  Rational a;
  Rational b;
  Rational c;
  std::int64_t period;
  std::vector<Rational> periodic_table;
  Rational b_f;

  /// a x^2 + b x + c + B(x) for x >= 0 and 0 for x < 0 (the profile f).
  Rational f(std::int64_t x) const;
};

/// Coefficient n = number of partitions of n into parts from the triple.
Series r_series(const Triple& t, int order);

/// Throws ConsistencyError if the raw periodic part fails to repeat.
QuadraticProfile periodic_profile(const Triple& t);

/// Exact R(n) from the profile; throws ConsistencyError if not integral.
Integer r_closed_form(const QuadraticProfile& p, std::int64_t n);
Integer r_closed_form(const Triple& t, std::int64_t n);

/// The eight triples tabulated for the positivity theorems, in table order.
const std::vector<Triple>& table_triples();

}  // namespace pentatail

#endif  // PENTATAIL_POLYA_HPP
