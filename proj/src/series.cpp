#include "pentatail/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pentatail {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

Series::Series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::one(int order) { return monomial(order, 0, 1); }

Series Series::monomial(int order, std::int64_t exponent, Integer coeff) {
  Series s(order);
  if (exponent < 0) throw std::invalid_argument("negative exponent in monomial");
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(coeff);
  return s;
}

Integer Series::at(std::int64_t n) const {
  if (n < 0 || n > order()) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

Series Series::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  const auto n = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, c.begin());
  return Series(std::move(c));
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x == 0; });
}

namespace {

template <typename Op>
Series combine(const Series& s, const Series& t, Op op) {
  const int order = std::min(s.order(), t.order());
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[n] = op(s[n], t[n]);
  return Series(std::move(c));
}

void check_stride(std::int64_t a) {
  if (a <= 0) throw std::invalid_argument("factor 1 - q^a needs a >= 1, got a = " + std::to_string(a));
}

}  // namespace

Series operator+(const Series& s, const Series& t) {
  return combine(s, t, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}

Series operator-(const Series& s, const Series& t) {
  return combine(s, t, [](const Integer& x, const Integer& y) { return Integer(x - y); });
}

Series operator-(Series s) {
  auto c = std::move(s).into_coeffs();
  for (auto& x : c) x = -x;
  return Series(std::move(c));
}

Series scale(Series s, const Integer& k) {
  auto c = std::move(s).into_coeffs();
  for (auto& x : c) x *= k;
  return Series(std::move(c));
}

Series shift(const Series& s, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative shift");
  std::vector<Integer> c(static_cast<std::size_t>(s.order()) + 1, Integer(0));
  for (std::int64_t n = e; n <= s.order(); ++n) c[n] = s[n - e];
  return Series(std::move(c));
}

Series mul(const Series& s, const Series& t) {
  const int order = std::min(s.order(), t.order());
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  for (int i = 0; i <= order; ++i) {
    if (s[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (t[j] != 0) c[i + j] += s[i] * t[j];
    }
  }
  return Series(std::move(c));
}

Series div_one_minus_qa(Series s, std::int64_t a) {
  check_stride(a);
  auto c = std::move(s).into_coeffs();
  const auto n_max = static_cast<std::int64_t>(c.size());
  for (std::int64_t n = a; n < n_max; ++n) c[n] += c[n - a];
  return Series(std::move(c));
}

Series mul_one_minus_qa(Series s, std::int64_t a) {
  check_stride(a);
  auto c = std::move(s).into_coeffs();
  for (auto n = static_cast<std::int64_t>(c.size()) - 1; n >= a; --n) c[n] -= c[n - a];
  return Series(std::move(c));
}

Series pochhammer(std::int64_t start, std::int64_t step, std::optional<std::int64_t> count,
                  int order) {
  if (start < 1 || step < 1) throw std::invalid_argument("pochhammer needs start, step >= 1");
  if (count && *count < 0) throw std::invalid_argument("pochhammer count must be nonnegative");
  Series s = Series::one(order);
  for (std::int64_t j = 0; !count || j < *count; ++j) {
    const std::int64_t e = start + j * step;
    if (e > order) break;
    s = mul_one_minus_qa(std::move(s), e);
  }
  return s;
}

Series pentagonal_tail(int k, int order) {
  if (k < 0) throw std::invalid_argument("pentagonal_tail needs k >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  for (std::int64_t j = k;; ++j) {
    const std::int64_t e = pentagonal(j);
    if (e > order) break;
    const int sign = (j - k) % 2 == 0 ? 1 : -1;
    c[e] += sign;
    const std::int64_t e2 = e + 2 * j + 1;
    if (e2 <= order) c[e2] -= sign;
  }
  return Series(std::move(c));
}

Series theta_jtp(std::int64_t i, std::int64_t d, int order) {
  if (d < 1 || i < 1 || i >= d) {
    throw std::invalid_argument("theta_jtp needs 1 <= i < d (exponents would go negative)");
  }
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  c[0] += 1;
  // Exponents increase strictly in |n| along both directions when 1 <= i < d.
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t e = d * n * (n - 1) / 2 + i * n;
    if (e > order) break;
    c[e] += n % 2 == 0 ? 1 : -1;
  }
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t e = d * m * (m + 1) / 2 - i * m;
    if (e > order) break;
    c[e] += m % 2 == 0 ? 1 : -1;
  }
  return Series(std::move(c));
}

QPolynomial::QPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPolynomial::value_at_one() const {
  Integer v = 0;
  for (const auto& x : coeffs_) v += x;
  return v;
}

QPolynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial needs nonnegative arguments");
  if (k > n) return QPolynomial();
  k = std::min(k, n - k);
  // prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j), dividing exactly after each step
  // so intermediate values stay polynomial.
  const int deg = k * (n - k);
  const int work = deg + k * (k + 1) / 2 + (n - k) * k + 1;
  std::vector<Integer> c(static_cast<std::size_t>(work) + 1, Integer(0));
  c[0] = 1;
  int top = 0;
  for (int j = 1; j <= k; ++j) {
    const int up = n - k + j;
    for (int e = top + up; e >= up; --e) c[e] -= c[e - up];
    top += up;
    for (int e = j; e <= top; ++e) c[e] += c[e - j];
    top -= j;
  }
  c.resize(static_cast<std::size_t>(deg) + 1);
  return QPolynomial(std::move(c));
}

}  // namespace pentatail
