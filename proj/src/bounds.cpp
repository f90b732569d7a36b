#include "pentatail/bounds.hpp"

#include <stdexcept>

#include "pentatail/series.hpp"

namespace pentatail {

namespace {

Rational abs_rational(const Rational& x) { return x < 0 ? Rational(-x) : x; }

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("bound index k must be >= 1");
}

Rational pfk(const BoundConstants& bc, int k, std::int64_t l) {
  const Rational denom = 3 * k - 2;
  const Rational rl = l;
  const Rational linear = 2 * (Rational(k) - Rational(1, 6) - bc.a_f / denom);
  const Rational constant = Rational(k) + Rational(2, 3) + bc.b_f_cap / denom;
  return rl * rl + linear * rl - constant;
}

int floor_root(const BoundConstants& bc, int k) {
  // P(0) < 0 and P is a monic quadratic, so {l >= 0 : P(l) <= 0} is [0, L].
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (pfk(bc, k, hi) <= 0) hi *= 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (pfk(bc, k, mid) <= 0 ? lo : hi) = mid;
  }
  return static_cast<int>(lo);
}

}  // namespace

int BoundTable::l_cap(int k) const {
  require_k(k);
  return k <= k_cap ? l_caps[static_cast<std::size_t>(k - 1)] : 0;
}

BoundConstants bound_constants(const QuadraticProfile& p) {
  const Rational shared = p.b_f + Rational(4, 3) * p.a;
  return {(shared + p.b / 2) / p.a, (shared + abs_rational(p.c)) / p.a};
}

Rational pfk_eval(const QuadraticProfile& p, int k, std::int64_t l) {
  require_k(k);
  return pfk(bound_constants(p), k, l);
}

int l_floor(const QuadraticProfile& p, int k) {
  require_k(k);
  return floor_root(bound_constants(p), k);
}

BoundTable profile_bounds(const QuadraticProfile& p) {
  const BoundConstants bc = bound_constants(p);
  const Rational limit = 2 * bc.a_f + bc.b_f_cap;
  // k <= k_F  <=>  k(3k-2) <= 2 A_F + B_F for k >= 1.
  int k = 0;
  while (Rational(std::int64_t{k + 1} * (3 * (k + 1) - 2)) <= limit) ++k;
  BoundTable table{bc.a_f, bc.b_f_cap, k, {}};
  for (int j = 1; j <= k; ++j) table.l_caps.push_back(floor_root(bc, j));
  return table;
}

Rational closed_form_main(const QuadraticProfile& p, int k, std::int64_t m, std::int64_t h) {
  require_k(k);
  if (m <= k) throw std::invalid_argument("closed_form_main needs m > k");
  if (h < 0 || h > 3 * m) throw std::invalid_argument("closed_form_main needs 0 <= h <= 3m");
  const Rational& a = p.a;
  const Rational two_a_b = 2 * a + p.b;
  const Rational rk = k;
  const Rational rm = m;
  const Rational twist = Rational(2 * h - m);
  Rational value = two_a_b * rk - 3 * a * rk * rk * rk + a * rk * (3 * rm * rm + twist);
  const Rational alternating = two_a_b * rm + a * rm * twist - p.f(h - m);
  value += (m - k) % 2 == 0 ? Rational(-alternating) : alternating;
  return value;
}

std::int64_t block_start(int k, std::int64_t l) {
  return pentagonal(k) + (3 * l - 1) * (2 * k + l) / 2;
}

std::int64_t guaranteed_block_start(const BoundTable& table, int k) {
  require_k(k);
  if (k > table.k_cap) return pentagonal(k) + 2 * k + 1;
  return block_start(k, table.l_cap(k) + 1);
}

std::int64_t guaranteed_block_start(const QuadraticProfile& p, int k) {
  return guaranteed_block_start(profile_bounds(p), k);
}

}  // namespace pentatail
