// Truncated power series in q with exact integer coefficients, plus the
// classical q-objects built from them (q-Pochhammer products, pentagonal
// tails, Jacobi theta sums, Gaussian binomials).
//
// Every series carries its truncation order N explicitly and stores the
// coefficients of q^0 .. q^N. Values are immutable: each operation returns a
// fresh series.

#ifndef PENTATAIL_SERIES_HPP
#define PENTATAIL_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pentatail {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Pentagonal number j(3j+1)/2, the lowest exponent of the j-th tail term.
constexpr std::int64_t pentagonal(std::int64_t j) { return j * (3 * j + 1) / 2; }

class Series {
 public:
  /// Zero series of the given order.
  explicit Series(int order);
  /// Takes ownership of coefficients q^0..q^{size-1}; must be non-empty.
  explicit Series(std::vector<Integer> coeffs);

  static Series one(int order);
  static Series monomial(int order, std::int64_t exponent, Integer coeff = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& operator[](std::int64_t n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  /// Coefficient of q^n, or zero when n is negative or beyond the order.
  Integer at(std::int64_t n) const;
  std::span<const Integer> coeffs() const { return coeffs_; }
  std::vector<Integer> into_coeffs() && { return std::move(coeffs_); }

  Series truncated(int order) const;
  bool is_zero() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Integer> coeffs_;
};

Series operator+(const Series& s, const Series& t);
Series operator-(const Series& s, const Series& t);
Series operator-(Series s);
Series scale(Series s, const Integer& c);
/// Multiply by q^e (coefficients shift up, the order is kept).
Series shift(const Series& s, std::int64_t e);

/// Schoolbook product; the result has order min(s.order(), t.order()).
Series mul(const Series& s, const Series& t);

/// s / (1 - q^a). Throws std::invalid_argument for a == 0.
Series div_one_minus_qa(Series s, std::int64_t a);
/// s * (1 - q^a). Throws std::invalid_argument for a == 0.
Series mul_one_minus_qa(Series s, std::int64_t a);

/// Truncation of prod_{0 <= j < count} (1 - q^{start + j*step}); an empty
/// count means the infinite product (factors with exponent > order are 1).
Series pochhammer(std::int64_t start, std::int64_t step, std::optional<std::int64_t> count,
                  int order);

/// (q;q)_infinity truncated at the given order.
inline Series euler_product(int order) { return pochhammer(1, 1, std::nullopt, order); }

/// sum_{j>=k} (-1)^{j-k} q^{j(3j+1)/2} (1 - q^{2j+1}). k = 0 gives the full
/// pentagonal number series, which equals (q;q)_infinity.
Series pentagonal_tail(int k, int order);

/// sum_{n in Z} (-1)^n q^{d*binom(n,2) + i*n} for 1 <= i < d.
Series theta_jtp(std::int64_t i, std::int64_t d, int order);

/// Polynomial in q with exact integer coefficients (degree = size - 1).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Integer> coeffs);

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  Integer value_at_one() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Gaussian binomial [n choose k]_q; zero polynomial when k > n.
QPolynomial q_binomial(int n, int k);

}  // namespace pentatail

#endif  // PENTATAIL_SERIES_HPP
