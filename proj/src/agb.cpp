#include "pentatail/agb.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "pentatail/errors.hpp"

namespace pentatail {

AGBParams::AGBParams(int d, int i, int tau) : d_(d), i_(i), tau_(tau) {
  if (d < 1) throw std::invalid_argument("AGB depth d must be >= 1");
  if (tau != 0 && tau != 1) throw std::invalid_argument("AGB flag tau must be 0 or 1");
  if (i < 1 || i > d + 1) {
    throw std::invalid_argument("AGB residue i must lie in [1, d+1], got i = " + std::to_string(i));
  }
}

namespace {

Series div_euler(Series s) {
  for (int j = 1; j <= s.order(); ++j) s = div_one_minus_qa(std::move(s), j);
  return s;
}

bool avoided_residue(std::int64_t n, int i, int modulus) {
  const std::int64_t r = n % modulus;
  return r == 0 || r == i || r == modulus - i;
}

struct SumSideWalker {
  const AGBParams& p;
  int order;
  Series total;
  std::vector<std::int64_t> r;

  void descend(int depth, std::int64_t exponent) {
    if (depth == p.d()) {
      emit(exponent);
      return;
    }
    const std::int64_t cap = depth == 0 ? order : r[depth - 1];
    for (std::int64_t v = 0; v <= cap; ++v) {
      // r_{depth+1} contributes v^2, plus v when its index is >= i.
      const std::int64_t e = exponent + v * v + (depth + 1 >= p.i() ? v : 0);
      if (e > order) break;
      r.push_back(v);
      descend(depth + 1, e);
      r.pop_back();
    }
  }

  void emit(std::int64_t exponent) {
    Series term = Series::monomial(order, exponent);
    const std::int64_t room = order - exponent;
    for (int j = 0; j + 1 < p.d(); ++j) {
      for (std::int64_t m = 1; m <= r[j] - r[j + 1] && m <= room; ++m) {
        term = div_one_minus_qa(std::move(term), m);
      }
    }
    const std::int64_t step = 2 - p.tau();
    for (std::int64_t m = 1; m <= r.back() && step * m <= room; ++m) {
      term = div_one_minus_qa(std::move(term), step * m);
    }
    total = total + term;
  }
};

}  // namespace

Series ag_product_side(const AGBParams& p, int order) {
  const int m = p.modulus();
  Series s = pochhammer(p.i(), m, std::nullopt, order);
  s = mul(s, pochhammer(m - p.i(), m, std::nullopt, order));
  s = mul(s, pochhammer(m, m, std::nullopt, order));
  return div_euler(std::move(s));
}

Series ag_sum_side(const AGBParams& p, int order) {
  if (p.d() > kMaxSumSideDepth) {
    throw LimitExceeded("ag_sum_side supports d <= " + std::to_string(kMaxSumSideDepth));
  }
  SumSideWalker walker{p, order, Series(order), {}};
  walker.descend(0, 0);
  return walker.total;
}

Series div_residue_avoiding(Series s, int i, int modulus, const Triple* skip) {
  for (int n = 1; n <= s.order(); ++n) {
    if (avoided_residue(n, i, modulus)) continue;
    if (skip != nullptr && skip->contains(n)) continue;
    s = div_one_minus_qa(std::move(s), n);
  }
  return s;
}

Series c_series(int i, int modulus, int k, int order) {
  if (i < 1 || 2 * i >= modulus) {
    throw std::invalid_argument("c_series needs 1 <= i < M/2");
  }
  if (k < 1) throw std::invalid_argument("tail index k must be >= 1");
  return div_residue_avoiding(pentagonal_tail(k, order), i, modulus);
}

std::optional<Triple> table1_triple(int i, int modulus) {
  if (i < 1 || 2 * i >= modulus) return std::nullopt;
  switch (i) {
    case 1:
      if (modulus == 5) return Triple(2, 3, 7);
      if (modulus >= 7) return Triple(2, 3, 5);
      return std::nullopt;
    case 2:
      if (modulus == 5) return Triple(1, 4, 9);
      if (modulus == 6) return Triple(1, 3, 5);
      if (modulus >= 7) return Triple(1, 3, 4);
      return std::nullopt;
    case 3:
      if (modulus == 7) return Triple(1, 2, 5);
      if (modulus == 8) return Triple(1, 2, 7);
      if (modulus >= 9) return Triple(1, 2, 5);
      return std::nullopt;
    default:
      if (modulus >= 9) return Triple(1, 2, 3);
      return std::nullopt;
  }
}

Series c_series_via_triple(const Triple& t, int i, int modulus, int k, int order) {
  for (int part : t.parts()) {
    if (avoided_residue(part, i, modulus)) {
      throw std::invalid_argument("triple " + t.to_string() + " uses an excluded residue");
    }
  }
  return div_residue_avoiding(tp_series(t, k, order), i, modulus, &t);
}

namespace {

// Calls visit(n, value) for every n whose value a*binom(n,2)+b*n <= x could
// still reach x, walking outward from 0 in both directions.
template <typename Visit>
void scan_pset(std::int64_t a, std::int64_t b, std::int64_t x, Visit visit) {
  if (a < 1) throw std::invalid_argument("polygonal set needs a >= 1");
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t v = a * n * (n - 1) / 2 + b * n;
    visit(n, v);
    if (v > x && a * n + b > 0) break;
  }
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t v = a * m * (m + 1) / 2 - b * m;
    visit(-m, v);
    if (v > x && a * (m + 1) - b > 0) break;
  }
}

}  // namespace

bool is_in_pset(std::int64_t a, std::int64_t b, std::int64_t x) {
  bool found = false;
  scan_pset(a, b, x, [&](std::int64_t, std::int64_t v) { found = found || v == x; });
  return found;
}

int theta_coefficient(std::int64_t a, std::int64_t b, std::int64_t x) {
  int total = 0;
  scan_pset(a, b, x, [&](std::int64_t n, std::int64_t v) {
    if (v == x) total += n % 2 == 0 ? 1 : -1;
  });
  return total;
}

IdentityCheck alternating_d_sum_check(int i, int modulus, int k, int order) {
  const Series c = c_series(i, modulus, k, order);
  Series dn = pochhammer(i, modulus, std::nullopt, order);
  dn = mul(dn, pochhammer(modulus - i, modulus, std::nullopt, order));
  dn = mul(dn, pochhammer(modulus, modulus, std::nullopt, order));
  dn = div_euler(std::move(dn));

  const int outer = k % 2 == 1 ? 1 : -1;  // (-1)^{k-1}
  for (int n = 0; n <= order; ++n) {
    Integer value = 0;
    for (std::int64_t l = -k + 1; l <= k; ++l) {
      value += (l % 2 == 0 ? 1 : -1) * dn.at(n - l * (3 * l - 1) / 2);
    }
    value *= outer;
    value -= outer * theta_coefficient(modulus, i, n);
    if (value != c[n]) return {false, n};
  }
  return {};
}

Series bd_series(int d, int order) {
  if (d < 2) throw std::invalid_argument("d-regular partitions need d >= 2");
  return div_euler(pochhammer(d, d, std::nullopt, order));
}

Series b_trunc_series(int d, int k, int order) {
  if (d < 2) throw std::invalid_argument("d-regular partitions need d >= 2");
  if (k < 1) throw std::invalid_argument("tail index k must be >= 1");
  Series s = pentagonal_tail(k, order);
  for (int n = 1; n <= order; ++n) {
    if (n % d != 0) s = div_one_minus_qa(std::move(s), n);
  }
  return s;
}

Integer cor_inequality_value(const Series& b, int d, int k, int n) {
  Integer value = 0;
  for (std::int64_t l = -k + 1; l <= k; ++l) {
    value += (l % 2 == 0 ? 1 : -1) * b.at(n - l * (3 * l - 1) / 2);
  }
  if (k % 2 == 0) value = -value;
  // (q^d;q^d)_infinity contributes only at multiples of d, with the sign of
  // its pentagonal index.
  const int theta = n % d == 0 ? theta_coefficient(3, 1, n / d) : 0;
  value += (k % 2 == 0 ? 1 : -1) * theta;
  return value;
}

InequalityCheck cor_inequality_check(int d, int k, int order) {
  if (k < 1) throw std::invalid_argument("tail index k must be >= 1");
  const Series b = bd_series(d, order);
  const std::int64_t start = pentagonal(k);
  for (int n = 0; n <= order; ++n) {
    const Integer v = cor_inequality_value(b, d, k, n);
    if (v < 0 || (n >= start && v == 0)) return {false, n};
  }
  return {};
}

std::int64_t two_three_coefficient(std::int64_t n) {
  const std::int64_t ceil = (n + 1 + 5) / 6;
  const bool indicator = ((n - 1) % 6 + 6) % 6 == 0;
  return ceil - (indicator ? 1 : 0);
}

Series pentagonal_partial_sum(int k, int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  for (std::int64_t n = -k + 1; n <= k; ++n) {
    const std::int64_t e = n * (3 * n - 1) / 2;
    if (e <= order) c[e] += n % 2 == 0 ? 1 : -1;
  }
  return Series(std::move(c));
}

Series truncated_theta_quotient(int k, const Series& theta) {
  if (k < 1) throw std::invalid_argument("tail index k must be >= 1");
  const int order = theta.order();
  const Series inner = div_euler(pentagonal_partial_sum(k, order)) - Series::one(order);
  return scale(mul(inner, theta), k % 2 == 1 ? 1 : -1);
}

Series cor25_product(int order) {
  return mul(pochhammer(3, 12, std::nullopt, order), pochhammer(9, 12, std::nullopt, order));
}

Series cor25_quotient(int order) {
  Series s = pochhammer(3, 3, std::nullopt, order);
  for (int n = 6; n <= order; n += 6) {
    if (n % 12 == 6 || n % 12 == 0) s = div_one_minus_qa(std::move(s), n);
  }
  return s;
}

Series cor25_series(int k, int order) { return truncated_theta_quotient(k, cor25_product(order)); }

}  // namespace pentatail
