#include "pentatail/bivariate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "pentatail/parallel.hpp"

namespace pentatail {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int lo, std::vector<Integer> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {}

LaurentPoly LaurentPoly::ones(int lo, int hi) {
  if (hi < lo) return {};
  return LaurentPoly(lo, std::vector<Integer>(static_cast<std::size_t>(hi - lo + 1), Integer(1)));
}

Integer LaurentPoly::coeff(int m) const {
  if (coeffs_.empty() || m < lo_ || m > hi()) return 0;
  return coeffs_[static_cast<std::size_t>(m - lo_)];
}

Integer LaurentPoly::value_at_one() const {
  Integer v = 0;
  for (const auto& c : coeffs_) v += c;
  return v;
}

LaurentPoly LaurentPoly::padded(int lo, int hi) const {
  if (hi < lo) throw std::invalid_argument("empty padding range");
  for (int m = lo_; !coeffs_.empty() && m <= this->hi(); ++m) {
    if ((m < lo || m > hi) && coeff(m) != 0) {
      throw std::out_of_range("z^" + std::to_string(m) + " lies outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
    }
  }
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (int m = lo; m <= hi; ++m) c[static_cast<std::size_t>(m - lo)] = coeff(m);
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::trimmed() const {
  std::size_t first = 0;
  std::size_t last = coeffs_.size();
  while (first < last && coeffs_[first] == 0) ++first;
  while (last > first && coeffs_[last - 1] == 0) --last;
  if (first == last) return {};
  return LaurentPoly(lo_ + static_cast<int>(first),
                     std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                          coeffs_.begin() + static_cast<std::ptrdiff_t>(last)));
}

bool LaurentPoly::is_symmetric() const {
  if (coeffs_.empty()) return true;
  const int reach = std::max(std::abs(lo_), std::abs(hi()));
  for (int m = 1; m <= reach; ++m) {
    if (coeff(m) != coeff(-m)) return false;
  }
  return true;
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  const LaurentPoly a = x.trimmed();
  const LaurentPoly b = y.trimmed();
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return a.lo() == b.lo() && std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

namespace {

template <typename Op>
LaurentPoly combine(const LaurentPoly& x, const LaurentPoly& y, Op op) {
  if (x.empty() && y.empty()) return {};
  const int lo = x.empty() ? y.lo() : y.empty() ? x.lo() : std::min(x.lo(), y.lo());
  const int hi = x.empty() ? y.hi() : y.empty() ? x.hi() : std::max(x.hi(), y.hi());
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) c[static_cast<std::size_t>(m - lo)] = op(x.coeff(m), y.coeff(m));
  return LaurentPoly(lo, std::move(c));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  return combine(x, y, [](const Integer& a, const Integer& b) { return Integer(a + b); });
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
  return combine(x, y, [](const Integer& a, const Integer& b) { return Integer(a - b); });
}

LaurentPoly scale(const LaurentPoly& x, const Integer& c) {
  std::vector<Integer> out(x.coeffs().begin(), x.coeffs().end());
  for (auto& v : out) v *= c;
  return LaurentPoly(x.lo(), std::move(out));
}

LaurentPoly mul_z_power(const LaurentPoly& x, int e) {
  return LaurentPoly(x.lo() + e, std::vector<Integer>(x.coeffs().begin(), x.coeffs().end()));
}

LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<Integer> c(x.coeffs().size() + y.coeffs().size() - 1, Integer(0));
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs().size(); ++j) c[i + j] += x.coeffs()[i] * y.coeffs()[j];
  }
  return LaurentPoly(x.lo() + y.lo(), std::move(c));
}

bool check_unimodal(const LaurentPoly& p) {
  const auto c = p.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

// ------------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BiSeries::BiSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

BiSeries scale(BiSeries s, const Integer& c) {
  auto v = std::move(s).into_coeffs();
  for (auto& p : v) p = scale(p, c);
  return BiSeries(std::move(v));
}

namespace {

void check_factor(ZFactor f) {
  if (f.q_power < 1) throw std::invalid_argument("bivariate factor needs a positive q-power");
  if (f.z_power < -1 || f.z_power > 1) throw std::invalid_argument("z-power must be -1, 0 or 1");
}

}  // namespace

BiSeries bi_divide(BiSeries s, ZFactor f) {
  check_factor(f);
  auto c = std::move(s).into_coeffs();
  for (std::size_t n = static_cast<std::size_t>(f.q_power); n < c.size(); ++n) {
    if (!c[n - f.q_power].empty()) c[n] = c[n] + mul_z_power(c[n - f.q_power], f.z_power);
  }
  return BiSeries(std::move(c));
}

BiSeries bi_multiply(BiSeries s, ZFactor f) {
  check_factor(f);
  auto c = std::move(s).into_coeffs();
  for (auto n = static_cast<std::ptrdiff_t>(c.size()) - 1; n >= f.q_power; --n) {
    if (!c[n - f.q_power].empty()) c[n] = c[n] - mul_z_power(c[n - f.q_power], f.z_power);
  }
  return BiSeries(std::move(c));
}

BiSeries bi_mul_one_minus_z(const BiSeries& s) {
  std::vector<LaurentPoly> c;
  c.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) c.push_back(s[n] - mul_z_power(s[n], 1));
  return BiSeries(std::move(c));
}

Series evaluate_at_z_one(const BiSeries& s) {
  std::vector<Integer> c;
  c.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) c.push_back(s[n].value_at_one());
  return Series(std::move(c));
}

namespace {

template <typename Kernel>
BiSeries theta_sum(int k, bool finite, int order, Kernel kernel) {
  if (k < 0) throw std::invalid_argument("numerator index k must be >= 0");
  BiSeries s(order);
  auto c = std::move(s).into_coeffs();
  for (std::int64_t j = finite ? 0 : k; !finite || j <= k; ++j) {
    const std::int64_t e = j * (j + 1) / 2;
    if (e > order) break;
    c[static_cast<std::size_t>(e)] =
        c[static_cast<std::size_t>(e)] + scale(kernel(static_cast<int>(j)), j % 2 == 0 ? 1 : -1);
  }
  return BiSeries(std::move(c));
}

}  // namespace

BiSeries bi_tail_numerator(int k, bool finite, int order) {
  return theta_sum(k, finite, order, [](int j) { return LaurentPoly::ones(-j, j); });
}

BiSeries bi_theta_numerator(int k, bool finite, int order) {
  return theta_sum(k, finite, order, [](int j) {
    return LaurentPoly::ones(-j, -j) - LaurentPoly::ones(j + 1, j + 1);
  });
}

std::vector<LaurentPoly> conj54_table(int k, int d, int n_max) {
  if (k < 1 || d < 1) throw std::invalid_argument("conj54_table needs k, d >= 1");
  const int shift = k * (k + 1) / 2;
  BiSeries s = scale(bi_tail_numerator(k, false, n_max + shift), k % 2 == 0 ? 1 : -1);
  for (int j = 1; j <= d; ++j) {
    s = bi_divide(std::move(s), {1, j});
    s = bi_divide(std::move(s), {-1, j});
  }
  std::vector<LaurentPoly> rows;
  for (int n = 0; n <= n_max; ++n) rows.push_back(s[n + shift].padded(-n - k, n + k));
  return rows;
}

std::vector<LaurentPoly> conj53_table(int k, int n_max) {
  if (k < 0) throw std::invalid_argument("conj53_table needs k >= 0");
  BiSeries s = scale(bi_tail_numerator(k, true, n_max), k % 2 == 0 ? 1 : -1);
  // 1/(z;q)_inf = 1/(1-z) * 1/(zq;q)_inf; the 1/(1-z) is already absorbed.
  for (int j = 1; j <= n_max; ++j) {
    s = bi_divide(std::move(s), {1, j});
    s = bi_divide(std::move(s), {-1, j});
    s = bi_divide(std::move(s), {0, j});
  }
  std::vector<LaurentPoly> rows;
  for (int n = 0; n <= n_max; ++n) rows.push_back(s[n].padded(-n, n));
  return rows;
}

Series trunc_jtp_series(int r, int s, int k, JtpMode mode, int order) {
  if (s < 1 || 2 * s >= r) throw std::invalid_argument("trunc_jtp_series needs 1 <= S < R/2");
  if (k < 0) throw std::invalid_argument("trunc_jtp_series needs k >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  auto add_term = [&](std::int64_t n, int sign) {
    const std::int64_t e = n * (n + 1) / 2 * r - n * s;
    if (e <= order) c[static_cast<std::size_t>(e)] += sign;
    const std::int64_t e2 = e + (2 * n + 1) * s;
    if (e2 <= order) c[static_cast<std::size_t>(e2)] -= sign;
    return e <= order;
  };
  if (mode == JtpMode::head) {
    for (std::int64_t n = 0; n < k; ++n) add_term(n, ((n + k - 1) % 2 == 0) ? 1 : -1);
  } else {
    for (std::int64_t j = k; add_term(j, ((j + k) % 2 == 0) ? 1 : -1); ++j) {
    }
  }
  Series out(std::move(c));
  for (std::int64_t e = s; e <= order; e += r) out = div_one_minus_qa(std::move(out), e);
  for (std::int64_t e = r - s; e <= order; e += r) out = div_one_minus_qa(std::move(out), e);
  if (mode == JtpMode::head) {
    for (std::int64_t e = r; e <= order; e += r) out = div_one_minus_qa(std::move(out), e);
  }
  return out;
}

// ---------------------------------------------------------------------- scans

int ConjectureReport::exit_code() const {
  if (!hard_failures.empty()) return 1;
  if (!findings.empty()) return 3;
  return 0;
}

namespace {

struct CellOutcome {
  std::vector<ConjectureFinding> findings;
  std::vector<ConjectureFinding> hard;
  // (property, scope) -> (claimed, failed)
  std::vector<std::pair<std::pair<std::string, std::string>, std::pair<bool, bool>>> tallies;
};

void collect(ConjectureReport& report, std::vector<CellOutcome>&& cells) {
  std::map<std::pair<std::string, std::string>, PropertyOutcome> outcomes;
  for (auto& cell : cells) {
    report.findings.insert(report.findings.end(), cell.findings.begin(), cell.findings.end());
    report.hard_failures.insert(report.hard_failures.end(), cell.hard.begin(), cell.hard.end());
    for (const auto& [key, flags] : cell.tallies) {
      auto& o = outcomes[key];
      o.property = key.first;
      o.scope = key.second;
      o.claimed = flags.first;
      ++o.cells;
      if (flags.second) ++o.failures;
    }
  }
  for (auto& [key, o] : outcomes) report.outcomes.push_back(std::move(o));
}

std::optional<int> first_nonpositive(const LaurentPoly& row) {
  for (int m = row.lo(); m <= row.hi(); ++m) {
    if (row.coeff(m) <= 0) return m;
  }
  return std::nullopt;
}

std::optional<int> first_asymmetry(const LaurentPoly& row) {
  for (int m = 1; m <= std::max(-row.lo(), row.hi()); ++m) {
    if (row.coeff(m) != row.coeff(-m)) return m;
  }
  return std::nullopt;
}

}  // namespace

ConjectureReport scan_bivariate_tail(int k_max, int d_max, int n_max, unsigned workers) {
  if (k_max < 1 || d_max < 1 || n_max < 0) throw std::invalid_argument("malformed bivariate grid");
  ConjectureReport report;
  report.subject = "bivariate-tail";
  report.grid = "k<=" + std::to_string(k_max) + ",d<=" + std::to_string(d_max) +
                ",n<=" + std::to_string(n_max);
  std::vector<std::pair<int, int>> cells;
  for (int k = 1; k <= k_max; ++k) {
    for (int d = 1; d <= d_max; ++d) cells.emplace_back(k, d);
  }
  auto results = parallel_map<CellOutcome>(cells.size(), workers, [&](std::size_t idx) {
    const auto [k, d] = cells[idx];
    CellOutcome out;
    std::vector<LaurentPoly> rows;
    try {
      rows = conj54_table(k, d, n_max);
    } catch (const std::out_of_range& e) {
      out.hard.push_back({"support", k, d, -1, std::nullopt, e.what()});
      return out;
    }
    bool positive = true;
    bool unimodal = true;
    for (int n = 0; n <= n_max; ++n) {
      const auto& row = rows[static_cast<std::size_t>(n)];
      if (auto m = first_asymmetry(row)) out.hard.push_back({"symmetry", k, d, n, m, ""});
      if (row.coeff(n + k) != 1) {
        out.hard.push_back({"edge", k, d, n, n + k, "J(n+k)=" + row.coeff(n + k).str()});
      }
      if (auto m = first_nonpositive(row)) {
        positive = false;
        if (d >= 2) out.findings.push_back({"positivity", k, d, n, m, row.coeff(*m).str()});
      }
      if (!check_unimodal(row)) {
        unimodal = false;
        if (d >= 3) out.findings.push_back({"unimodality", k, d, n, std::nullopt, ""});
      }
    }
    const std::string scope = "d=" + std::to_string(d);
    out.tallies.push_back({{"positivity", scope}, {d >= 2, !positive}});
    out.tallies.push_back({{"unimodality", scope}, {d >= 3, !unimodal}});
    return out;
  });
  collect(report, std::move(results));
  return report;
}

ConjectureReport scan_bivariate_finite(int k_max, int n_max, unsigned workers) {
  if (k_max < 0 || n_max < 0) throw std::invalid_argument("malformed bivariate grid");
  ConjectureReport report;
  report.subject = "bivariate-finite";
  report.grid = "k<=" + std::to_string(k_max) + ",n<=" + std::to_string(n_max);
  auto results = parallel_map<CellOutcome>(
      static_cast<std::size_t>(k_max) + 1, workers, [&](std::size_t idx) {
        const int k = static_cast<int>(idx);
        CellOutcome out;
        std::vector<LaurentPoly> rows;
        try {
          rows = conj53_table(k, n_max);
        } catch (const std::out_of_range& e) {
          out.hard.push_back({"support", k, 0, -1, std::nullopt, e.what()});
          return out;
        }
        bool unimodal = true;
        for (int n = 0; n <= n_max; ++n) {
          const auto& row = rows[static_cast<std::size_t>(n)];
          if (auto m = first_asymmetry(row)) out.hard.push_back({"symmetry", k, 0, n, m, ""});
          if (n >= 1 && !check_unimodal(row)) {
            unimodal = false;
            out.findings.push_back({"unimodality", k, 0, n, std::nullopt, ""});
          }
        }
        out.tallies.push_back({{"unimodality", "k=" + std::to_string(k)}, {true, !unimodal}});
        return out;
      });
  collect(report, std::move(results));
  return report;
}

ConjectureReport scan_trunc_jtp(const std::vector<std::pair<int, int>>& rs_pairs, int k_max,
                                int order, const std::vector<JtpMode>& modes, unsigned workers) {
  if (k_max < 1 || order < 0 || rs_pairs.empty() || modes.empty()) {
    throw std::invalid_argument("malformed trunc-jtp grid");
  }
  for (const auto& [r, s] : rs_pairs) {
    if (s < 1 || 2 * s >= r) throw std::invalid_argument("trunc-jtp needs 1 <= S < R/2");
  }
  ConjectureReport report;
  report.subject = "trunc-jtp";
  report.grid = "k<=" + std::to_string(k_max) + ",order=" + std::to_string(order);
  struct Cell {
    int r, s, k;
    JtpMode mode;
  };
  std::vector<Cell> cells;
  for (const auto& [r, s] : rs_pairs) {
    for (auto mode : modes) {
      for (int k = 1; k <= k_max; ++k) cells.push_back({r, s, k, mode});
    }
  }
  auto results = parallel_map<CellOutcome>(cells.size(), workers, [&](std::size_t idx) {
    const Cell& c = cells[idx];
    CellOutcome out;
    const Series series = trunc_jtp_series(c.r, c.s, c.k, c.mode, order);
    const bool head = c.mode == JtpMode::head;
    const std::string property = head ? "head-nonnegativity" : "tail-nonnegativity";
    bool ok = true;
    // The head statement covers q^m for m >= 1; its constant term is (-1)^{k-1}.
    for (int n = head ? 1 : 0; n <= order; ++n) {
      if (series[n] >= 0) continue;
      ok = false;
      ConjectureFinding f{property, c.k, 0, n, std::nullopt,
                          "R=" + std::to_string(c.r) + ",S=" + std::to_string(c.s) +
                              ",value=" + series[n].str()};
      // The head statement is a theorem; a negative there is a bug.
      (head ? out.hard : out.findings).push_back(std::move(f));
    }
    out.tallies.push_back(
        {{property, "R=" + std::to_string(c.r) + ",S=" + std::to_string(c.s)}, {true, !ok}});
    return out;
  });
  collect(report, std::move(results));
  return report;
}

}  // namespace pentatail
