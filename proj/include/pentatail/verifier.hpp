// Turns the positivity bounds into finite scans and compares what the scans
// find against the published exception lists.
//
// For a triple and each k <= K the range [g_k, guaranteed_block_start(k)) is
// split into the head [g_k, g_k + 2k], where TP^k(n) = R(n - g_k) is read off
// the closed form, and the remainder, which is scanned coefficient by
// coefficient. Beyond that range positivity follows from the bounds. Zeros
// of R inside the head window certify a zero family valid for every k.

#ifndef PENTATAIL_VERIFIER_HPP
#define PENTATAIL_VERIFIER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pentatail/bounds.hpp"
#include "pentatail/polya.hpp"
#include "pentatail/series.hpp"

namespace pentatail {

enum class Status { pass, counterexample, mismatch_with_paper };

std::string to_string(Status s);

/// Half-open window [lo, hi) of exponents scanned for tail index k.
struct ScanWindow {
  int k;
  std::int64_t lo;
  std::int64_t hi;
  friend bool operator==(const ScanWindow&, const ScanWindow&) = default;
  friend auto operator<=>(const ScanWindow&, const ScanWindow&) = default;
};

struct ZeroHit {
  int k;
  std::int64_t n;
  friend bool operator==(const ZeroHit&, const ZeroHit&) = default;
  friend auto operator<=>(const ZeroHit&, const ZeroHit&) = default;
};

struct NegativeHit {
  int k;
  std::int64_t n;
  Integer value;
  friend bool operator==(const NegativeHit& x, const NegativeHit& y) {
    return x.k == y.k && x.n == y.n && x.value == y.value;
  }
  friend bool operator<(const NegativeHit& x, const NegativeHit& y) {
    return std::tie(x.k, x.n) < std::tie(y.k, y.n);
  }
};

/// Zeros at n = k(3k+1)/2 + offset for every k >= k_from.
struct ZeroFamily {
  std::int64_t offset;
  int k_from;
  friend bool operator==(const ZeroFamily&, const ZeroFamily&) = default;
  friend auto operator<=>(const ZeroFamily&, const ZeroFamily&) = default;
  bool covers(const ZeroHit& z) const { return z.k >= k_from && z.n == pentagonal(z.k) + offset; }
  std::string describe(const std::string& symbol) const;
};

struct ExceptionSet {
  std::vector<ZeroHit> zeros;
  std::vector<NegativeHit> negatives;
  std::optional<ZeroFamily> family;
};

struct VerificationReport {
  std::string subject;
  std::vector<ScanWindow> scanned;
  std::vector<ZeroHit> zeros;
  std::vector<NegativeHit> negatives;
  std::vector<std::string> parametric_zeros;
  std::vector<ZeroFamily> families;
  /// Windows past the last block the published scan range reaches.
  std::vector<ScanWindow> extra_blocks;
  /// Zeros that fall inside an extra block (flagged, never a failure).
  std::vector<ZeroHit> extra_block_zeros;
  bool head_checked = false;
  Status status = Status::pass;
  std::vector<std::string> mismatches;
};

/// Sorted, duplicate-free classification of s over [lo, hi). Throws
/// std::out_of_range when the window exceeds the truncation.
struct PositivityScan {
  std::vector<std::int64_t> zeros;
  std::vector<std::pair<std::int64_t, Integer>> negatives;
};
PositivityScan scan_positivity(const Series& s, std::int64_t lo, std::int64_t hi);

struct VerifyOptions {
  int k_min = 1;
  /// Overrides K from the bound table as the last k handled.
  std::optional<int> k_max;
  unsigned workers = 1;
  /// Largest truncation order any cell may request; LimitExceeded beyond.
  int max_order = 200000;
};

/// Zero families of TP for the triple, from the zeros of R.
std::vector<ZeroFamily> head_zero_families(const QuadraticProfile& p);

/// Raw scan (no comparison); status is counterexample iff negatives exist.
VerificationReport verify_triple(const Triple& t, const VerifyOptions& opts = {});

/// Sets status and mismatches by comparing report findings with `expected`.
void compare_with_exceptions(VerificationReport& r, const ExceptionSet& expected);

enum class TheoremId { mth1, mth2, th2, th1 };

std::optional<TheoremId> parse_theorem_id(const std::string& id);
std::string to_string(TheoremId id);

struct TheoremReport {
  std::string theorem;
  Status status = Status::pass;
  std::vector<VerificationReport> reports;
};

/// The published exception lists for a theorem, keyed by report subject.
std::vector<std::pair<std::string, ExceptionSet>> published_exceptions(TheoremId id);

TheoremReport verify_theorem(TheoremId id, const VerifyOptions& opts = {});

/// Subject names used in reports.
std::string tp_subject(const Triple& t);
std::string c_subject(int i, int modulus);
std::string b_subject(int d);

/// (i, M) cells scanned for the C-series theorem and its order.
std::vector<std::pair<int, int>> th2_cells();
inline constexpr int kTheoremSeriesOrder = 200;
inline constexpr int kTheoremSeriesMaxK = 4;
inline constexpr int kRegularMaxD = 10;

}  // namespace pentatail

#endif  // PENTATAIL_VERIFIER_HPP
