// Randomized invariants. Every generator is seeded, so failures reproduce.

#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "pentatail/agb.hpp"
#include "pentatail/bivariate.hpp"
#include "pentatail/bounds.hpp"
#include "pentatail/report.hpp"
#include "pentatail/tails.hpp"
#include "pentatail/verifier.hpp"

using namespace pentatail;

namespace {

constexpr int kRounds = 40;

Series random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::vector<Integer> c;
  for (int n = 0; n <= order; ++n) c.emplace_back(coeff(rng));
  return Series(std::move(c));
}

Triple random_sorted_triple(std::mt19937& rng, int max_part) {
  auto [a, b, c] = oracle::random_triple(rng, max_part);
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return Triple(v[0], v[1], v[2]);
}

// Brute-force unimodality: some peak index splits the row into a
// nondecreasing prefix and a nonincreasing suffix.
bool unimodal_by_peak(const std::vector<int>& v) {
  for (std::size_t p = 0; p < std::max<std::size_t>(v.size(), 1); ++p) {
    bool ok = true;
    for (std::size_t i = 1; i <= p && i < v.size(); ++i) ok = ok && v[i - 1] <= v[i];
    for (std::size_t i = p + 1; i < v.size(); ++i) ok = ok && v[i - 1] >= v[i];
    if (ok) return true;
  }
  return v.empty();
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("divide then multiply by 1 - q^a is the identity") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick_a(1, 30);
    for (int round = 0; round < kRounds; ++round) {
      const Series s = random_series(rng, 80);
      const int a = pick_a(rng);
      CHECK(mul_one_minus_qa(div_one_minus_qa(s, a), a) == s);
      CHECK(div_one_minus_qa(mul_one_minus_qa(s, a), a) == s);
    }
  }

  TEST_CASE("series product against dense convolution") {
    std::mt19937 rng(12);
    for (int round = 0; round < kRounds; ++round) {
      const Series s = random_series(rng, 40);
      const Series t = random_series(rng, 40);
      CHECK(oracle::as_poly(mul(s, t)) == oracle::convolve(oracle::as_poly(s), oracle::as_poly(t), 40));
      CHECK(mul(s, t) == mul(t, s));
    }
  }

  TEST_CASE("Gaussian binomials are palindromic with the right value at 1") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pick_n(0, 18);
    for (int round = 0; round < kRounds; ++round) {
      const int n = pick_n(rng);
      const int k = std::uniform_int_distribution<int>(0, n)(rng);
      const QPolynomial g = q_binomial(n, k);
      REQUIRE(g.degree() == k * (n - k));
      for (int j = 0; j <= g.degree(); ++j) CHECK(g[j] == g[g.degree() - j]);
      CHECK(g.value_at_one() == oracle::binomial(n, k));
      CHECK(oracle::Poly(g.coeffs().begin(), g.coeffs().end()) == oracle::pascal_qbinomial(n, k));
    }
  }

  TEST_CASE("quadratic-plus-periodic form of three-part partition counts") {
    std::mt19937 rng(14);
    for (int round = 0; round < 12; ++round) {
      const Triple t = random_sorted_triple(rng, 9);
      const QuadraticProfile p = periodic_profile(t);
      CAPTURE(t.to_string());
      CHECK(p.period == t.product());
      const int n = static_cast<int>(2 * p.period);
      const Series r = r_series(t, n);
      for (int j = 0; j <= n; ++j) REQUIRE(r_closed_form(p, j) == r[j]);
      for (int j = 0; j <= 40; j += 7) CHECK(r_closed_form(p, j) == oracle::count_restricted({t.alpha(), t.beta(), t.gamma()}, j));
      const auto [lo, hi] = std::minmax_element(p.periodic_table.begin(), p.periodic_table.end());
      CHECK(*hi == p.b_f);
      CHECK(*lo >= -p.b_f);
    }
  }

  TEST_CASE("bound constants on random triples") {
    std::mt19937 rng(15);
    for (int round = 0; round < 12; ++round) {
      const Triple t = random_sorted_triple(rng, 8);
      const QuadraticProfile p = periodic_profile(t);
      const BoundTable b = profile_bounds(p);
      CAPTURE(t.to_string());
      const Rational s = 2 * b.a_f + b.b_f_cap;
      CHECK(Rational(b.k_cap * (3 * b.k_cap - 2)) <= s);
      CHECK(s < Rational((b.k_cap + 1) * (3 * b.k_cap + 1)));
      for (int k = 1; k <= b.k_cap; ++k) {
        CHECK(pfk_eval(p, k, b.l_cap(k)) <= 0);
        CHECK(pfk_eval(p, k, b.l_cap(k) + 1) > 0);
      }
      CHECK(b.l_cap(b.k_cap + 1) == 0);
    }
  }

  TEST_CASE("tail head window and closed-form sandwich on random triples") {
    std::mt19937 rng(16);
    for (int round = 0; round < 8; ++round) {
      const Triple t = random_sorted_triple(rng, 7);
      const QuadraticProfile p = periodic_profile(t);
      CAPTURE(t.to_string());
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      const int m_top = k + 8;
      const Series tp = tp_series(t, k, m_top * (3 * m_top - 1) / 2 + 3 * m_top);
      for (int j = 0; j <= 2 * k; ++j) REQUIRE(tp[pentagonal(k) + j] == r_closed_form(p, j));
      for (int m = k + 1; m <= m_top; ++m) {
        for (int h = 0; h <= 3 * m; ++h) {
          const Rational diff = Rational(tp[m * (3 * m - 1) / 2 + h]) - closed_form_main(p, k, m, h);
          const Rational bound = Rational(2 * (m - k)) * p.b_f;
          REQUIRE(diff <= bound);
          REQUIRE(-diff <= bound);
        }
      }
    }
  }

  TEST_CASE("parts {2,3} counts against direct enumeration") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::int64_t> pick(0, 2000000);
    for (int round = 0; round < kRounds; ++round) {
      const std::int64_t n = pick(rng);
      std::int64_t count = 0;
      for (std::int64_t y = 0; 3 * y <= n; ++y) count += (n - 3 * y) % 2 == 0;
      CHECK(two_three_coefficient(n) == count);
    }
  }

  TEST_CASE("verifier scan regions tile exactly on random triples") {
    std::mt19937 rng(18);
    for (int round = 0; round < 6; ++round) {
      const Triple t = random_sorted_triple(rng, 6);
      const BoundTable b = profile_bounds(periodic_profile(t));
      CAPTURE(t.to_string());
      VerifyOptions o;
      o.k_max = b.k_cap + 1;
      const VerificationReport r = verify_triple(t, o);
      for (int k = 1; k <= b.k_cap + 1; ++k) {
        std::vector<ScanWindow> ws;
        for (const auto& w : r.scanned) {
          if (w.k == k) ws.push_back(w);
        }
        std::sort(ws.begin(), ws.end());
        REQUIRE_FALSE(ws.empty());
        CHECK(ws.front().lo == pentagonal(k));
        for (std::size_t i = 1; i < ws.size(); ++i) CHECK(ws[i].lo == ws[i - 1].hi);
        const std::int64_t stop = k <= b.k_cap ? guaranteed_block_start(b, k) : pentagonal(k) + 2 * k + 1;
        CHECK(ws.back().hi == stop);
      }
      for (const auto& z : r.zeros) {
        const Series tp = tp_series(t, z.k, static_cast<int>(z.n));
        CHECK(tp[z.n] == 0);
      }
      VerifyOptions eight = o;
      eight.workers = 8;
      CHECK(emit_report(r, Format::json) == emit_report(verify_triple(t, eight), Format::json));
    }
  }

  TEST_CASE("unimodality checker against a peak search") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> len(0, 9);
    std::uniform_int_distribution<int> val(0, 4);
    for (int round = 0; round < 400; ++round) {
      std::vector<int> v(static_cast<std::size_t>(len(rng)));
      for (auto& x : v) x = val(rng);
      const LaurentPoly p(0, std::vector<Integer>(v.begin(), v.end()));
      CAPTURE(v.size());
      CHECK(check_unimodal(p) == unimodal_by_peak(v));
    }
  }

  TEST_CASE("products of symmetric Laurent polynomials stay symmetric") {
    std::mt19937 rng(20);
    std::uniform_int_distribution<int> reach(0, 5);
    std::uniform_int_distribution<int> val(-3, 3);
    auto symmetric = [&] {
      const int r = reach(rng);
      std::vector<Integer> c(static_cast<std::size_t>(2 * r + 1));
      for (int m = 0; m <= r; ++m) c[static_cast<std::size_t>(r + m)] = c[static_cast<std::size_t>(r - m)] = val(rng);
      return LaurentPoly(-r, std::move(c));
    };
    for (int round = 0; round < kRounds; ++round) {
      const LaurentPoly a = symmetric();
      const LaurentPoly b = symmetric();
      CHECK(a.is_symmetric());
      CHECK(mul(a, b).is_symmetric());
      CHECK(mul(a, b).value_at_one() == a.value_at_one() * b.value_at_one());
    }
  }

  TEST_CASE("mod-12 truncations stay positive") {
    for (int k = 1; k <= 4; ++k) {
      const Series s = cor25_series(k, 200);
      for (int n = static_cast<int>(pentagonal(k)); n <= 200; ++n) REQUIRE(s[n] > 0);
    }
  }
}
