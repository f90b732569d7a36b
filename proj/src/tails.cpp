#include "pentatail/tails.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentatail {

namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("tail index k must be >= 1");
}

// s / (q;q)_infinity, skipping factors that cannot reach the truncation.
Series div_euler(Series s) {
  for (int j = 1; j <= s.order(); ++j) s = div_one_minus_qa(std::move(s), j);
  return s;
}

}  // namespace

Series tp_series(const Triple& t, int k, int order) {
  require_k(k);
  Series s = pentagonal_tail(k, order);
  for (int part : t.parts()) s = div_one_minus_qa(std::move(s), part);
  return s;
}

Series gp_series(int k, int order) {
  require_k(k);
  return div_euler(pentagonal_tail(k, order));
}

Series mk_series(int k, int order) {
  require_k(k);
  Series total(order);
  const std::int64_t base = std::int64_t{k} * (k - 1) / 2;
  for (std::int64_t n = k;; ++n) {
    const std::int64_t lowest = base + (k + 1) * n;
    if (lowest > order) break;
    const QPolynomial binom = q_binomial(static_cast<int>(n - 1), k - 1);
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
    for (int e = 0; e <= binom.degree() && lowest + e <= order; ++e) c[lowest + e] = binom[e];
    Series term(std::move(c));
    // 1/(1-q^j) with j > order - lowest leaves the truncation unchanged.
    const std::int64_t last = std::min<std::int64_t>(n, order - lowest);
    for (std::int64_t j = 1; j <= last; ++j) term = div_one_minus_qa(std::move(term), j);
    total = total + term;
  }
  return total;
}

Integer mk_bruteforce(int k, int n, int cap) {
  require_k(k);
  Integer count = 0;
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        // Parts arrive in nonincreasing order.
        int below = 0;
        int above = 0;
        std::vector<bool> present(static_cast<std::size_t>(k) + 1, false);
        for (int p : parts) {
          if (p < k) ++below;
          if (p > k) ++above;
          if (p <= k) present[p] = true;
        }
        for (int j = 1; j < k; ++j) {
          if (!present[j]) return;
        }
        if (!present[k] && above > below) ++count;
      },
      cap);
  return count;
}

IdentityCheck compare_series(const Series& lhs, const Series& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    if (lhs[n] != rhs[n]) return {false, n};
  }
  return {};
}

IdentityCheck check_am_identity(int k, int order) {
  require_k(k);
  std::vector<Integer> head(static_cast<std::size_t>(order) + 1, Integer(0));
  for (std::int64_t j = 0; j < k; ++j) {
    const int sign = j % 2 == 0 ? 1 : -1;
    if (const auto e = pentagonal(j); e <= order) head[e] += sign;
    if (const auto e = pentagonal(j) + 2 * j + 1; e <= order) head[e] -= sign;
  }
  const Series lhs = div_euler(Series(std::move(head)));
  const Series rhs = Series::one(order) + scale(mk_series(k, order), k % 2 == 1 ? 1 : -1);
  return compare_series(lhs, rhs);
}

}  // namespace pentatail
