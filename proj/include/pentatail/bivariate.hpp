// Series in q whose coefficients are Laurent polynomials in z, and scans of
// the truncated Jacobi-triple-product and two-variable theta quotients.
//
// Theorem checks (a failure means a bug) are kept apart from conjecture
// scans (a failure is a counterexample worth reporting).

#ifndef PENTATAIL_BIVARIATE_HPP
#define PENTATAIL_BIVARIATE_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pentatail/series.hpp"

namespace pentatail {

/// Dense Laurent polynomial: coeffs[j] is the coefficient of z^{lo + j}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<Integer> coeffs);
  /// z^{lo} + z^{lo+1} + ... + z^{hi}, or zero when hi < lo.
  static LaurentPoly ones(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  bool empty() const { return coeffs_.empty(); }
  std::span<const Integer> coeffs() const { return coeffs_; }
  /// Coefficient of z^m (zero outside the stored range).
  Integer coeff(int m) const;
  Integer value_at_one() const;

  /// Same polynomial stored over exactly [lo, hi]; throws std::out_of_range
  /// if a nonzero coefficient falls outside.
  LaurentPoly padded(int lo, int hi) const;
  /// Smallest stored range holding every nonzero coefficient.
  LaurentPoly trimmed() const;
  /// True iff coeff(m) == coeff(-m) for every m.
  bool is_symmetric() const;

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

 private:
  int lo_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly scale(const LaurentPoly& x, const Integer& c);
LaurentPoly mul_z_power(const LaurentPoly& x, int e);
LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y);

/// True iff the stored coefficients are nondecreasing then nonincreasing.
bool check_unimodal(const LaurentPoly& p);

/// Truncated series sum_n coeffs[n](z) q^n for n <= order.
class BiSeries {
 public:
  explicit BiSeries(int order);
  explicit BiSeries(std::vector<LaurentPoly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  std::vector<LaurentPoly> into_coeffs() && { return std::move(coeffs_); }

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::vector<LaurentPoly> coeffs_;
};

BiSeries scale(BiSeries s, const Integer& c);

/// The factor 1 - z^{z_power} q^{q_power} with z_power in {-1, 0, 1}.
struct ZFactor {
  int z_power;
  int q_power;
};

/// s / factor: t_n = s_n + z^{z_power} t_{n - q_power}. Throws
/// std::invalid_argument for q_power < 1 or z_power outside {-1, 0, 1}.
BiSeries bi_divide(BiSeries s, ZFactor factor);
BiSeries bi_multiply(BiSeries s, ZFactor factor);
/// s * (1 - z).
BiSeries bi_mul_one_minus_z(const BiSeries& s);
/// Sum of z-coefficients in every q-degree.
Series evaluate_at_z_one(const BiSeries& s);

/// sum_j (-1)^j q^{j(j+1)/2} z^{-j} (1 + z + ... + z^{2j}); over 0 <= j <= k
/// when finite, else over j >= k.
BiSeries bi_tail_numerator(int k, bool finite, int order);
/// The same sum with the raw factor z^{-j}(1 - z^{2j+1}) (before dividing by 1 - z).
BiSeries bi_theta_numerator(int k, bool finite, int order);

/// L^d_{k,n}(z) for 0 <= n <= n_max, each stored over [-n-k, n+k].
std::vector<LaurentPoly> conj54_table(int k, int d, int n_max);

/// Rows (J_k(m, n))_{-n <= m <= n} for 0 <= n <= n_max.
std::vector<LaurentPoly> conj53_table(int k, int n_max);

enum class JtpMode { head, tail };

/// head: (-1)^{k-1} sum_{0<=n<k} (-1)^n q^{binom(n+1,2)R - nS}(1 - q^{(2n+1)S})
///       / (q^S, q^{R-S}, q^R; q^R)_infinity
/// tail: (-1)^k sum_{j>=k} (-1)^j q^{j(j+1)R/2 - jS}(1 - q^{(2j+1)S})
///       / (q^S, q^{R-S}; q^R)_infinity
/// Requires 1 <= S < R/2 and k >= 0.
Series trunc_jtp_series(int r, int s, int k, JtpMode mode, int order);

struct ConjectureFinding {
  std::string property;
  int k = 0;
  int d = 0;
  int n = 0;
  std::optional<int> m;
  std::string detail;
};

/// Outcome of one property over all cells sharing a d (or an (R,S) pair).
struct PropertyOutcome {
  std::string property;
  std::string scope;
  bool claimed = false;
  int cells = 0;
  int failures = 0;
};

struct ConjectureReport {
  std::string subject;
  std::string grid;
  /// Violations of claimed conjecture properties.
  std::vector<ConjectureFinding> findings;
  /// Violations of asserted identities (support, symmetry, edge, proven cases).
  std::vector<ConjectureFinding> hard_failures;
  std::vector<PropertyOutcome> outcomes;

  /// 0 clean, 1 hard failure, 3 conjecture counterexample.
  int exit_code() const;
};

ConjectureReport scan_bivariate_tail(int k_max, int d_max, int n_max, unsigned workers = 1);
ConjectureReport scan_bivariate_finite(int k_max, int n_max, unsigned workers = 1);
ConjectureReport scan_trunc_jtp(const std::vector<std::pair<int, int>>& rs_pairs, int k_max,
                                int order, const std::vector<JtpMode>& modes,
                                unsigned workers = 1);

}  // namespace pentatail

#endif  // PENTATAIL_BIVARIATE_HPP
