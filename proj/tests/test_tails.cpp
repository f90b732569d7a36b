#include <doctest.h>

#include "oracles.hpp"
#include "pentatail/errors.hpp"
#include "pentatail/tails.hpp"

using namespace pentatail;

TEST_SUITE("tails") {
  TEST_CASE("tp_series published zeros and empty support") {
    CHECK(tp_series(Triple(1, 2, 3), 1, 20)[13] == 0);
    CHECK(tp_series(Triple(2, 3, 5), 3, 20)[16] == 0);
    for (const auto& t : table_triples()) CHECK(tp_series(t, 2, 10)[5] == 0);
  }

  TEST_CASE("tp_series matches dense division") {
    const Triple t(1, 3, 5);
    const int n = 120;
    const auto expect = oracle::divide(oracle::as_poly(pentagonal_tail(2, n)), {1, 3, 5}, n);
    CHECK(oracle::as_poly(tp_series(t, 2, n)) == expect);
  }

  TEST_CASE("gp_series examples") {
    CHECK(gp_series(1, 10)[2] == 1);
    for (int k = 1; k <= 4; ++k) {
      const Series g = gp_series(k, 40);
      for (int n = 0; n < pentagonal(k); ++n) CHECK(g[n] == 0);
    }
    CHECK(gp_series(1, 30)[30] == mk_bruteforce(1, 30));
  }

  TEST_CASE("mk_series examples") {
    const Series m = mk_series(1, 10);
    CHECK(m[2] == 1);
    CHECK(m[1] == 0);
    CHECK(m[0] == 0);
  }

  TEST_CASE("mk_series equals gp_series for k <= 5") {
    for (int k = 1; k <= 5; ++k) CHECK(mk_series(k, 200) == gp_series(k, 200));
  }

  TEST_CASE("mk_bruteforce examples and oracle") {
    CHECK(mk_bruteforce(1, 2) == 1);
    CHECK(mk_bruteforce(1, 1) == 0);
    CHECK(mk_bruteforce(2, 7) == 1);
    CHECK(gp_series(2, 7)[7] == 1);
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= 18; ++n) CHECK(mk_bruteforce(k, n) == oracle::count_mk(k, n));
    }
    CHECK_THROWS_AS(mk_bruteforce(1, 41), LimitExceeded);
  }

  TEST_CASE("generating function against enumeration for n <= 30") {
    for (int k = 1; k <= 5; ++k) {
      const Series m = mk_series(k, 30);
      for (int n = 1; n <= 30; ++n) REQUIRE(m[n] == mk_bruteforce(k, n));
    }
  }

  TEST_CASE("averaged truncation identity") {
    CHECK(check_am_identity(1, 200).holds);
    CHECK(check_am_identity(5, 200).holds);
    CHECK(check_am_identity(1, 0).holds);
    CHECK_FALSE(check_am_identity(3, 100).first_mismatch.has_value());
  }

  TEST_CASE("compare_series reports the first mismatch") {
    Series a = Series::one(10);
    Series b = Series::monomial(10, 0) + Series::monomial(10, 7);
    const IdentityCheck c = compare_series(a, b);
    CHECK_FALSE(c.holds);
    CHECK(c.first_mismatch == 7);
    CHECK(compare_series(a, a.truncated(20)).holds);
  }

  TEST_CASE("support starts at k(3k+1)/2") {
    const Triple t(1, 2, 3);
    for (int k = 1; k <= 10; ++k) {
      const Series tp = tp_series(t, k, 300);
      const Series gp = gp_series(k, 300);
      for (int n = 0; n < std::min<std::int64_t>(pentagonal(k), 301); ++n) {
        REQUIRE(tp[n] == 0);
        REQUIRE(gp[n] == 0);
      }
    }
  }

  TEST_CASE("gp_series is tp_series over the remaining factors") {
    const int n = 150;
    for (const auto& t : table_triples()) {
      for (int k = 1; k <= 3; ++k) {
        Series s = tp_series(t, k, n);
        for (int j = 1; j <= n; ++j) {
          if (!t.contains(j)) s = div_one_minus_qa(std::move(s), j);
        }
        CHECK(s == gp_series(k, n));
      }
    }
  }

  TEST_CASE("head window is R shifted") {
    for (const auto& t : table_triples()) {
      const QuadraticProfile p = periodic_profile(t);
      for (int k = 1; k <= 6; ++k) {
        const std::int64_t g = pentagonal(k);
        const Series s = tp_series(t, k, static_cast<int>(g + 2 * k));
        for (int j = 0; j <= 2 * k; ++j) REQUIRE(s[g + j] == r_closed_form(p, j));
      }
    }
  }

  TEST_CASE("gp_series nonnegative, strictly positive from k(3k+1)/2") {
    for (int k = 1; k <= 6; ++k) {
      const Series g = gp_series(k, 300);
      for (int n = 0; n <= 300; ++n) {
        if (n < pentagonal(k)) {
          REQUIRE(g[n] == 0);
        } else {
          REQUIRE(g[n] > 0);
        }
      }
    }
  }
}
