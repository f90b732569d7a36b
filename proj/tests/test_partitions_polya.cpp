#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "pentatail/errors.hpp"
#include "pentatail/partitions.hpp"
#include "pentatail/polya.hpp"

using namespace pentatail;

TEST_SUITE("partitions") {
  TEST_CASE("partitions_into examples") {
    const std::vector<int> p123{1, 2, 3};
    CHECK(partitions_into(p123, 6)[6] == 7);
    const std::vector<int> p235{2, 3, 5};
    CHECK(partitions_into(p235, 4)[1] == 0);
    const std::vector<int> p1{1};
    const Series ones = partitions_into(p1, 30);
    for (int n = 0; n <= 30; ++n) CHECK(ones[n] == 1);
  }

  TEST_CASE("partitions_into equals chained division") {
    const std::vector<std::vector<int>> sets{{1, 2, 3}, {2, 3, 7}, {1, 4, 9}, {3, 5, 6, 10}};
    for (const auto& parts : sets) {
      const int n = 150;
      Series chained = Series::one(n);
      for (int a : parts) chained = div_one_minus_qa(std::move(chained), a);
      CHECK(partitions_into(parts, n) == chained);
      CHECK(oracle::as_poly(chained) == oracle::divide(oracle::one(n), parts, n));
    }
  }

  TEST_CASE("for_each_partition visits p(n) partitions") {
    const std::vector<int> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231};
    for (int n = 0; n < static_cast<int>(p.size()); ++n) {
      int count = 0;
      for_each_partition(n, [&](std::span<const int> parts) {
        int sum = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          sum += parts[i];
          if (i > 0) CHECK(parts[i] <= parts[i - 1]);
        }
        CHECK(sum == n);
        ++count;
      });
      CHECK(count == p[n]);
    }
  }

  TEST_CASE("enumeration refuses beyond the cap") {
    CHECK_THROWS_AS(for_each_partition(41, [](std::span<const int>) {}), LimitExceeded);
    CHECK_THROWS_AS(count_dregular_bruteforce(2, 12, 10), LimitExceeded);
    CHECK_NOTHROW(count_dregular_bruteforce(2, 12, 12));
  }

  TEST_CASE("d-regular counts") {
    CHECK(count_dregular_bruteforce(2, 5) == 3);
    CHECK(count_dregular_bruteforce(3, 0) == 1);
    for (int d = 2; d <= 6; ++d) {
      std::vector<int> allowed;
      for (int j = 1; j <= 25; ++j) {
        if (j % d != 0) allowed.push_back(j);
      }
      for (int n = 0; n <= 25; ++n) CHECK(count_dregular_bruteforce(d, n) == oracle::count_restricted(allowed, n));
    }
  }
}

TEST_SUITE("polya") {
  TEST_CASE("triple validation") {
    CHECK_NOTHROW(Triple(1, 2, 3));
    CHECK_THROWS_AS(Triple(1, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(Triple(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Triple(0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Triple(-1, 2, 3), std::invalid_argument);
    const Triple t(2, 3, 7);
    CHECK(t.to_string() == "(2,3,7)");
    CHECK(t.product() == 42);
    CHECK(t.sum() == 12);
    CHECK(t.contains(3));
    CHECK_FALSE(t.contains(5));
  }

  TEST_CASE("r_series examples") {
    const Series r = r_series(Triple(1, 2, 3), 6);
    CHECK(oracle::as_poly(r) == oracle::Poly{1, 1, 2, 3, 4, 5, 7});
    CHECK(r_series(Triple(2, 3, 5), 3)[1] == 0);
    for (const auto& t : table_triples()) CHECK(r_series(t, 0)[0] == 1);
  }

  TEST_CASE("profile constants for (1,2,3)") {
    const QuadraticProfile p = periodic_profile(Triple(1, 2, 3));
    CHECK(p.a == Rational(1, 12));
    CHECK(p.b == Rational(1, 2));
    CHECK(p.c == Rational(17, 24));
    CHECK(p.b_f == Rational(7, 24));
    CHECK(p.period == 6);
    CHECK(p.f(-1) == 0);
  }

  TEST_CASE("profile constants for (2,3,7)") {
    const QuadraticProfile p = periodic_profile(Triple(2, 3, 7));
    CHECK(p.c == Rational(71, 168));
    CHECK(p.b_f == Rational(97, 168));
  }

  TEST_CASE("table constants C and B") {
    const std::vector<std::pair<Rational, Rational>> expect{
        {Rational(17, 24), Rational(7, 24)},   {Rational(27, 40), Rational(13, 40)},
        {Rational(41, 56), Rational(23, 56)},  {Rational(7, 12), Rational(5, 12)},
        {Rational(19, 30), Rational(11, 30)},  {Rational(13, 24), Rational(7, 12)},
        {Rational(49, 120), Rational(71, 120)}, {Rational(71, 168), Rational(97, 168)}};
    const auto& ts = table_triples();
    REQUIRE(ts.size() == expect.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const QuadraticProfile p = periodic_profile(ts[i]);
      CHECK(p.c == expect[i].first);
      CHECK(p.b_f == expect[i].second);
    }
  }

  TEST_CASE("closed form agrees with the series over three periods") {
    for (const auto& t : table_triples()) {
      const QuadraticProfile p = periodic_profile(t);
      const int n = static_cast<int>(3 * p.period);
      const Series r = r_series(t, n);
      for (int j = 0; j <= n; ++j) REQUIRE(r_closed_form(p, j) == r[j]);
      CHECK(r_closed_form(t, 6) == oracle::count_restricted({t.alpha(), t.beta(), t.gamma()}, 6));
    }
    CHECK(r_closed_form(Triple(1, 2, 3), 6) == 7);
    CHECK(r_closed_form(Triple(2, 3, 5), 1) == 0);
    CHECK(r_closed_form(Triple(1, 4, 9), 0) == 1);
  }

  TEST_CASE("periodic part is centred") {
    for (const auto& t : table_triples()) {
      const QuadraticProfile p = periodic_profile(t);
      REQUIRE(static_cast<std::int64_t>(p.periodic_table.size()) == p.period);
      const auto [lo, hi] = std::minmax_element(p.periodic_table.begin(), p.periodic_table.end());
      CHECK(*hi == p.b_f);
      CHECK(*lo == -p.b_f);
      CHECK(p.a == Rational(1, 2 * p.period));
      CHECK(p.b == Rational(t.sum()) * p.a);
    }
  }
}
