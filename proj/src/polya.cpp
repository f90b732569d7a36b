#include "pentatail/polya.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pentatail/errors.hpp"

namespace pentatail {

Triple::Triple(int alpha, int beta, int gamma) : parts_{alpha, beta, gamma} {
  if (alpha < 1 || beta < 1 || gamma < 1) {
    throw std::invalid_argument("triple parts must be positive");
  }
  if (alpha == beta || beta == gamma || alpha == gamma) {
    throw std::invalid_argument("triple parts must be distinct");
  }
  if (std::gcd(alpha, beta) != 1 || std::gcd(beta, gamma) != 1 || std::gcd(alpha, gamma) != 1) {
    throw std::invalid_argument("triple " + to_string() + " is not pairwise coprime");
  }
}

bool Triple::contains(int part) const {
  return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

std::int64_t Triple::product() const {
  return std::int64_t{parts_[0]} * parts_[1] * parts_[2];
}

std::string Triple::to_string() const {
  return "(" + std::to_string(parts_[0]) + "," + std::to_string(parts_[1]) + "," +
         std::to_string(parts_[2]) + ")";
}

Rational QuadraticProfile::f(std::int64_t x) const {
  if (x < 0) return 0;
  const Rational rx = x;
  return a * rx * rx + b * rx + c + periodic_table[static_cast<std::size_t>(x % period)];
}

Series r_series(const Triple& t, int order) {
  Series s = Series::one(order);
  for (int part : t.parts()) s = div_one_minus_qa(std::move(s), part);
  return s;
}

QuadraticProfile periodic_profile(const Triple& t) {
  const std::int64_t period = t.product();
  const Rational a(1, 2 * period);
  const Rational b = Rational(t.sum()) * a;
  constexpr int kPeriods = 3;
  const Series r = r_series(t, static_cast<int>(kPeriods * period));

  std::vector<Rational> raw(static_cast<std::size_t>(period));
  for (std::int64_t n = 0; n < kPeriods * period; ++n) {
    const Rational rn = n;
    const Rational value = Rational(r[n]) - a * rn * rn - b * rn;
    auto& slot = raw[static_cast<std::size_t>(n % period)];
    if (n < period) {
      slot = value;
    } else if (slot != value) {
      throw ConsistencyError("periodic part of R" + t.to_string() + " does not repeat at n = " +
                             std::to_string(n));
    }
  }

  const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  QuadraticProfile p{t, a, b, (*hi + *lo) / 2, period, {}, (*hi - *lo) / 2};
  p.periodic_table.reserve(raw.size());
  for (const auto& v : raw) p.periodic_table.push_back(v - p.c);
  return p;
}

Integer r_closed_form(const QuadraticProfile& p, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("r_closed_form needs n >= 0");
  const Rational value = p.f(n);
  if (denominator(value) != 1) {
    throw ConsistencyError("closed form of R" + p.triple.to_string() + " at n = " +
                           std::to_string(n) + " is not integral: " + value.str());
  }
  return numerator(value);
}

Integer r_closed_form(const Triple& t, std::int64_t n) {
  return r_closed_form(periodic_profile(t), n);
}

const std::vector<Triple>& table_triples() {
  static const std::vector<Triple> triples{
      {1, 2, 3}, {1, 2, 5}, {1, 2, 7}, {1, 3, 4}, {1, 3, 5}, {1, 4, 9}, {2, 3, 5}, {2, 3, 7},
  };
  return triples;
}

}  // namespace pentatail
