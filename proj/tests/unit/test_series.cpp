#include <doctest.h>

#include <random>

#include "wgm/asymptotics.hpp"
#include "wgm/errors.hpp"
#include "wgm/series.hpp"
#include "wgm/specfun.hpp"

using namespace wgm;

namespace {

PowerSeries random_series(std::mt19937& rng, std::size_t order, Rational beta = {1, 3}) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PowerSeries s{beta, std::vector<double>(order)};
  for (auto& c : s.coeffs) c = u(rng);
  return s;
}

double max_diff(const PowerSeries& a, const PowerSeries& b) {
  double d = 0.0;
  for (std::size_t q = 0; q < a.order(); ++q) d = std::max(d, std::abs(a[q] - b[q]));
  return d;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("small identities") {
    const PowerSeries a{{1, 3}, {1.0, 1.0, 0.0}};
    const PowerSeries b{{1, 3}, {1.0, -1.0, 0.0}};
    const auto p = series_mul(a, b);
    CHECK(p.coeffs == std::vector<double>{1.0, 0.0, -1.0});
    const PowerSeries one{{1, 3}, {1.0, 0.0, 0.0}};
    CHECK(series_mul(a, one).coeffs == a.coeffs);
    CHECK(series_sqrt_one_plus(PowerSeries{{1, 2}, std::vector<double>(5, 0.0)}).coeffs == std::vector<double>{1, 0, 0, 0, 0});
    const auto t = series_sqrt_one_plus(PowerSeries{{1, 2}, {0.0, 2.0, 1.0, 0.0, 0.0}});
    CHECK(t.coeffs == std::vector<double>{1.0, 1.0, 0.0, 0.0, 0.0});
  }

  TEST_CASE("product against brute-force convolution") {
    std::mt19937 rng(11);
    const auto s = random_series(rng, 8), t = random_series(rng, 8);
    const auto p = series_mul(s, t);
    for (int n = 0; n < 8; ++n) {
      double c = 0.0;
      for (int a = 0; a <= n; ++a) c += s.coeffs[a] * t.coeffs[n - a];
      CHECK(p.coeffs[n] == doctest::Approx(c).epsilon(1e-15));
    }
  }

  TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(7);
    for (std::size_t order = 1; order <= 12; ++order) {
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
        CHECK(max_diff(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))) < 1e-13);
        CHECK(max_diff(series_mul(a, series_add(b, c)), series_add(series_mul(a, b), series_mul(a, c))) < 1e-13);
        CHECK(max_diff(series_add(series_add(a, b), c), series_add(a, series_add(b, c))) < 1e-13);
        CHECK(max_diff(series_mul(a, b), series_mul(b, a)) < 1e-13);
      }
    }
  }

  TEST_CASE("square root squares back") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
      auto s = random_series(rng, 10, {1, 2});
      s.coeffs[0] = 0.5 * s.coeffs[0];
      const auto t = series_sqrt_one_plus(s);
      auto one_plus = s;
      one_plus.coeffs[0] += 1.0;
      CHECK(max_diff(series_mul(t, t), one_plus) < 1e-12);
    }
    CHECK_THROWS_AS(series_sqrt_one_plus(PowerSeries{{1, 2}, {-2.0, 0.0}}), Error);
  }

  TEST_CASE("mismatched series are rejected") {
    const PowerSeries a{{1, 3}, {1.0, 2.0}};
    const PowerSeries b{{1, 2}, {1.0, 2.0}};
    const PowerSeries c{{1, 3}, {1.0, 2.0, 3.0}};
    try {
      series_add(a, b);
      FAIL("expected BetaMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BetaMismatch);
    }
    try {
      series_mul(a, c);
      FAIL("expected OrderMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OrderMismatch);
    }
  }

  TEST_CASE("lambda_to_expansion") {
    SUBCASE("lambda_0 only gives the binomial coefficients") {
      const double l0 = 1.7;
      const auto e = lambda_to_expansion(PowerSeries{{1, 3}, {l0, 0.0, 0.0}}, Case::A, 1.0, 1, 0);
      REQUIRE(e.series.order() == 5);
      CHECK(e.series[0] == 1.0);
      CHECK(e.series[1] == 0.0);
      CHECK(e.series[2] == doctest::Approx(l0 / 2));
      CHECK(e.series[3] == 0.0);
      CHECK(e.series[4] == doctest::Approx(-l0 * l0 / 8));
    }
    SUBCASE("K^2 from the Airy eigenvalue") {
      const double kb = 0.8;
      const double a = airy_zero(1).a;
      const auto e = lambda_to_expansion(PowerSeries{{1, 3}, {a * std::pow(2 * kb, 2.0 / 3.0)}}, Case::A, 1.0, 1, 1);
      CHECK(e.series[2] == doctest::Approx(a / 2 * std::pow(2 * kb, 2.0 / 3.0)).epsilon(1e-15));
    }
    SUBCASE("squaring recovers 1 + t^2 lambda") {
      std::mt19937 rng(5);
      for (int rep = 0; rep < 20; ++rep) {
        const auto lam = random_series(rng, 9, {1, 2});
        const auto e = lambda_to_expansion(lam, Case::B, 0.3, -1, 2);
        const auto sq = series_mul(e.series, e.series);
        CHECK(sq[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(sq[1]) < 1e-15);
        for (std::size_t q = 0; q < lam.order(); ++q) CHECK(std::abs(sq[q + 2] - lam[q]) < 1e-13);
      }
    }
    SUBCASE("case and step must agree") {
      try {
        lambda_to_expansion(PowerSeries{{1, 2}, {1.0}}, Case::A, 1.0, 1, 0);
        FAIL("expected CaseBetaMismatch");
      } catch (const Error& e) {
        CHECK(e.code() == Errc::CaseBetaMismatch);
      }
    }
  }

  TEST_CASE("evaluate_expansion") {
    const auto e = constant_index_expansion(1.5, 1.0, 1, 0);
    CHECK(evaluate_expansion(e, 17, 1) == 17 * e.anchor);
    CHECK(evaluate_expansion(e, 40, 6) == doctest::Approx(30.1).epsilon(0.005));
    try {
      evaluate_expansion(e, 40, 20);
      FAIL("expected TermsExceedOrder");
    } catch (const Error& err) {
      CHECK(err.code() == Errc::TermsExceedOrder);
    }
  }
}
