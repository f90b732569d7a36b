// Andrews-Gordon-Bressoud identities, the truncated C-series built on them,
// d-regular partition truncations and generalized polygonal exponent sets.

#ifndef PENTATAIL_AGB_HPP
#define PENTATAIL_AGB_HPP

#include <cstdint>
#include <optional>

#include "pentatail/polya.hpp"
#include "pentatail/series.hpp"
#include "pentatail/tails.hpp"

namespace pentatail {

/// Depth d >= 1, residue 1 <= i <= d+1, Bressoud flag tau in {0,1}.
class AGBParams {
 public:
  AGBParams(int d, int i, int tau);

  int d() const { return d_; }
  int i() const { return i_; }
  int tau() const { return tau_; }
  int modulus() const { return 2 * d_ + 2 + tau_; }

 private:
  int d_;
  int i_;
  int tau_;
};

/// (q^i, q^{M-i}, q^M; q^M)_infinity / (q;q)_infinity with M = modulus.
Series ag_product_side(const AGBParams& p, int order);

inline constexpr int kMaxSumSideDepth = 4;

/// The nested r_1 >= ... >= r_d >= 0 sum side. Throws LimitExceeded for
/// d > kMaxSumSideDepth.
Series ag_sum_side(const AGBParams& p, int order);

/// s divided by (1 - q^n) for every n <= order with n not congruent to
/// 0 or +-i modulo M, optionally also skipping the parts of a triple.
Series div_residue_avoiding(Series s, int i, int modulus, const Triple* skip = nullptr);

/// Pentagonal tail from k times prod_{n != 0, +-i mod M} 1/(1-q^n);
/// requires 1 <= i < M/2.
Series c_series(int i, int modulus, int k, int order);

/// The Table-1 triple whose three-factor series divides c_series(i, M, .)
/// with a partition-product cofactor, if the table assigns one.
std::optional<Triple> table1_triple(int i, int modulus);

/// tp_series(triple, k) times the cofactor over the remaining admissible
/// parts; must equal c_series(i, M, k).
Series c_series_via_triple(const Triple& t, int i, int modulus, int k, int order);

/// Membership of x in {a*binom(n,2) + b*n : n in Z}, by two-sided scan.
bool is_in_pset(std::int64_t a, std::int64_t b, std::int64_t x);

/// Coefficient of q^x in sum_{n in Z} (-1)^n q^{a*binom(n,2) + b*n}; the
/// signed counterpart of is_in_pset.
int theta_coefficient(std::int64_t a, std::int64_t b, std::int64_t x);

/// Recomputes c_series(i, M, k) coefficientwise from the shifted alternating
/// sum of D(n) = [q^n] ag-product and the theta coefficient at n.
IdentityCheck alternating_d_sum_check(int i, int modulus, int k, int order);

/// (q^d;q^d)_infinity / (q;q)_infinity.
Series bd_series(int d, int order);

/// Pentagonal tail from k over prod of (1-q^n) with d not dividing n.
Series b_trunc_series(int d, int k, int order);

struct InequalityCheck {
  bool holds = true;
  std::optional<int> first_failure;
};

/// The alternating b_d inequality family: value >= 0 for all n <= order and
/// > 0 once n >= k(3k+1)/2.
InequalityCheck cor_inequality_check(int d, int k, int order);

/// Value of the alternating b_d expression at n (b is the bd_series).
Integer cor_inequality_value(const Series& b, int d, int k, int n);

/// ceil((n+1)/6) - [6 | n-1]: coefficient of q^n in 1/((1-q^2)(1-q^3)).
std::int64_t two_three_coefficient(std::int64_t n);

/// sum_{-k < n <= k} (-1)^n q^{n(3n-1)/2}.
Series pentagonal_partial_sum(int k, int order);

/// (-1)^{k-1} (S_k / (q;q)_infinity - 1) * theta, evaluated literally.
Series truncated_theta_quotient(int k, const Series& theta);

/// (q^3, q^9; q^12)_infinity and the quotient (q^3;q^3) / (q^6, q^12; q^12).
Series cor25_product(int order);
Series cor25_quotient(int order);

/// truncated_theta_quotient(k, cor25_product).
Series cor25_series(int k, int order);

}  // namespace pentatail

#endif  // PENTATAIL_AGB_HPP
