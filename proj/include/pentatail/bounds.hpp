// Positivity thresholds for f-weighted pentagonal tails.
//
// For a profile f(n) = a n^2 + b n + c + B(n) with |B| <= B_f, the tail
// F_k(n) is positive for every k above k_F, and for each k <= k_F from the
// block l > l_F(k) on. k_F and l_F(k) are roots of quadratics; only their
// floors are needed, and those are found by exact rational sign tests.

#ifndef PENTATAIL_BOUNDS_HPP
#define PENTATAIL_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "pentatail/polya.hpp"

namespace pentatail {

struct BoundTable {
  Rational a_f;      // A_F
  Rational b_f_cap;  // B_F
  int k_cap;         // K = floor(k_F)
  std::vector<int> l_caps;  // L(k) = floor(l_F(k)) for k = 1..K

  /// L(k) for any k >= 1; beyond K the root lies below 1, so this is 0.
  int l_cap(int k) const;
};

struct BoundConstants {
  Rational a_f;
  Rational b_f_cap;
};

BoundConstants bound_constants(const QuadraticProfile& p);

/// P_F^k(l) = l^2 + 2(k - 1/6 - A_F/(3k-2)) l - (k + 2/3 + B_F/(3k-2)).
Rational pfk_eval(const QuadraticProfile& p, int k, std::int64_t l);

/// max{l >= 0 : P_F^k(l) <= 0}.
int l_floor(const QuadraticProfile& p, int k);

BoundTable profile_bounds(const QuadraticProfile& p);

/// Main term of F_k(m(3m-1)/2 + h) for m > k >= 1, 0 <= h <= 3m; the true
/// value differs from it by at most 2(m-k) B_f.
Rational closed_form_main(const QuadraticProfile& p, int k, std::int64_t m, std::int64_t h);

/// First n of block l: k(3k+1)/2 + (3l-1)(2k+l)/2, i.e. n = m(3m-1)/2, m = k+l.
std::int64_t block_start(int k, std::int64_t l);

/// n from which F_k(n) > 0 is guaranteed: block L(k)+1 for k <= K, and
/// k(3k+1)/2 + 2k + 1 (end of the head) for k > K.
std::int64_t guaranteed_block_start(const QuadraticProfile& p, int k);
std::int64_t guaranteed_block_start(const BoundTable& table, int k);

}  // namespace pentatail

#endif  // PENTATAIL_BOUNDS_HPP
