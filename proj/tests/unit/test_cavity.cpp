#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <nlohmann/json.hpp>
#include <vector>

#include "wgm/cavity.hpp"
#include "wgm/errors.hpp"

using namespace wgm;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ConfigError;
}

std::vector<IndexProfile> builtin_profiles(double R) {
  return {IndexProfile::constant(1.5, R), IndexProfile::ilchenko(1.5, 2.0 / R, R), IndexProfile::ilchenko(1.5, 4.0 / R, R),
          IndexProfile::fisheye(3.0, R), IndexProfile::quadratic(2.0, 0.6 / (R * R), R)};
}

}  // namespace

TEST_SUITE("cavity") {
  TEST_CASE("profile values") {
    const auto c = IndexProfile::constant(1.5, 1.0);
    CHECK(c(0.5) == 1.5);
    CHECK(c(2.0) == 1.0);
    const auto il = IndexProfile::ilchenko(1.5, 2.0, 1.0);
    CHECK(il(1.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(il.derivative(1.0, 1) == doctest::Approx(-1.5).epsilon(1e-14));
    // one-sided difference from inside
    const double h = 1e-6;
    const double fd = (3 * il.inner(1.0) - 4 * il.inner(1.0 - h) + il.inner(1.0 - 2 * h)) / (2 * h);
    CHECK(il.derivative(1.0, 1) == doctest::Approx(fd).epsilon(1e-7));
  }

  TEST_CASE("effective potential") {
    const auto c = IndexProfile::constant(1.5, 2.0);
    CHECK(effective_potential(c, 2.0, Side::inner) == doctest::Approx(1.0 / (4.0 * 2.25)).epsilon(1e-15));
    CHECK(effective_potential(c, 2.0, Side::outer) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(code_of([&] { effective_potential(c, 0.0); }) == Errc::NonPositiveRadius);
  }

  TEST_CASE("W' = -2 W (1/r + n'/n) against fourth-order differences") {
    for (double R : {1.0, 2.5}) {
      for (const auto& prof : builtin_profiles(R)) {
        for (int i = 1; i <= 100; ++i) {
          const double r = R * (0.3 + 0.69 * i / 100.0);
          const double h = 2e-4 * r;
          auto W = [&](double x) { return effective_potential(prof, x); };
          const double fd = (-W(r + 2 * h) + 8 * W(r + h) - 8 * W(r - h) + W(r - 2 * h)) / (12 * h);
          const double an = effective_potential_derivative(prof, r);
          CAPTURE(family_name(prof.family()));
          CAPTURE(r);
          CHECK(std::abs(an - fd) <= 1e-10 * (std::abs(W(r)) / r));
        }
      }
    }
  }

  TEST_CASE("classification examples") {
    const auto a = classify(IndexProfile::ilchenko(1.5, 0.0, 1.0));
    CHECK(a.wcase == Case::A);
    CHECK(a.kappa_breve == doctest::Approx(1.0).epsilon(1e-14));
    const auto b = classify(IndexProfile::ilchenko(1.5, 2.0, 1.0));
    CHECK(b.wcase == Case::B);
    CHECK(std::abs(b.kappa_breve) < 1e-12);
    CHECK(b.mu_breve == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(b.W0 == doctest::Approx(1.0 / 2.25).epsilon(1e-14));
    const auto c = classify(IndexProfile::ilchenko(1.5, 4.0, 1.0));
    CHECK(c.wcase == Case::C);
    CHECK(c.R0 == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(c.R0 < 1.0);
    CHECK(c.mu0_breve == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(c.local_minima.size() == 1);
    CHECK_FALSE(c.multiwell_warning);
    // the minimum is a minimum of W
    const auto prof = IndexProfile::ilchenko(1.5, 4.0, 1.0);
    CHECK(effective_potential(prof, c.R0) < effective_potential(prof, c.R0 - 0.01));
    CHECK(effective_potential(prof, c.R0) < effective_potential(prof, c.R0 + 0.01));
  }

  TEST_CASE("ilchenko curvature is 1 - delta R / 2") {
    for (double R : {1.0, 2.0}) {
      for (double d : {0.0, 0.5, 1.0, 1.9}) {
        const auto w = classify(IndexProfile::ilchenko(1.5, d / R, R));
        CHECK(w.kappa_breve == doctest::Approx(1.0 - d / 2).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("classification is invariant under rescaling") {
    const std::vector<double> scales = {0.25, 3.0, 40.0};
    const auto base = builtin_profiles(1.0);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const auto w1 = classify(base[i]);
      for (double s : scales) {
        const auto ws = classify(builtin_profiles(s)[i]);
        CAPTURE(i);
        CAPTURE(s);
        CHECK(ws.wcase == w1.wcase);
        CHECK(std::abs(ws.kappa_breve - w1.kappa_breve) <= 1e-12 * std::max(1.0, std::abs(w1.kappa_breve)));
        CHECK(std::abs(ws.mu_breve - w1.mu_breve) <= 1e-12 * std::max(1.0, std::abs(w1.mu_breve)));
        if (w1.wcase == Case::C) {
          CHECK(std::abs(ws.mu0_breve - w1.mu0_breve) <= 1e-12 * std::max(1.0, w1.mu0_breve));
          CHECK(std::abs(ws.eta3 - w1.eta3) <= 1e-12 * std::max(1.0, std::abs(w1.eta3)));
          CHECK(std::abs(ws.eta4 - w1.eta4) <= 1e-12 * std::max(1.0, std::abs(w1.eta4)));
          CHECK(ws.R0 == doctest::Approx(s * w1.R0).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("WKB action") {
    const double n = 1.5;
    const double T = std::sqrt(5.0) / 3.0;
    CHECK(wkb_action(n).S0 == doctest::Approx(std::atanh(T) - T).epsilon(1e-15));
    // integral of sqrt(W - E) from R to R n(R), R = 1, E = 1/n^2
    boost::math::quadrature::tanh_sinh<double> ts;
    const double q = ts.integrate([n](double r) { return std::sqrt(std::max(0.0, 1.0 / (r * r) - 1.0 / (n * n))); }, 1.0, n);
    CHECK(wkb_action(n).S0 == doctest::Approx(q).epsilon(1e-12));
    CHECK(wkb_action(1.0 + 1e-10).S0 < 1e-14);
    double prev = 0.0;
    for (double x = 1.05; x < 4.0; x += 0.05) {
      CHECK(wkb_action(x).S0 > prev);
      prev = wkb_action(x).S0;
    }
    CHECK(code_of([] { wkb_action(1.0); }) == Errc::IndexNotAboveUnity);
  }

  TEST_CASE("table and custom profiles") {
    std::vector<double> r, n;
    for (int i = 0; i <= 40; ++i) {
      r.push_back(i / 40.0);
      n.push_back(1.5 * std::sqrt(1.0 + 1.0 - r.back()));
    }
    const auto t = IndexProfile::table(r, n, 1.0);
    const auto il = IndexProfile::ilchenko(1.5, 1.0, 1.0);
    CHECK(t(0.51) == doctest::Approx(il(0.51)).epsilon(1e-4));
    CHECK(classify(t).wcase == Case::A);

    std::vector<double> ones(r.size(), 1.0);
    CHECK_THROWS_AS(IndexProfile::table(r, ones, 1.0), Error);

    const auto c = IndexProfile::custom([](double x) { return 1.5 * std::sqrt(2.0 - x); }, 1.0);
    for (int q = 1; q <= 4; ++q) CHECK(c.derivative(0.9, q) == doctest::Approx(il.derivative(0.9, q)).epsilon(1e-4));
    const auto wc = classify(c);
    CHECK(wc.kappa_breve == doctest::Approx(0.5).epsilon(1e-7));
  }

  TEST_CASE("profile parameter checks") {
    CHECK(code_of([] { IndexProfile::constant(1.5, -1.0); }) == Errc::InvalidParameters);
    CHECK(code_of([] { IndexProfile::fisheye(1.5, 1.0); }) == Errc::InvalidParameters);
    CHECK(code_of([] { IndexProfile::constant(0.9, 1.0); }) == Errc::InvalidParameters);
    CHECK(code_of([] { profile_from_json(nlohmann::json{{"family", "moon"}, {"R", 1}}); }) == Errc::ConfigError);
    CHECK(code_of([] { profile_from_json(nlohmann::json{{"family", "constant"}, {"R", 1}}); }) == Errc::ConfigError);
  }

  TEST_CASE("profile JSON round trip") {
    for (const auto& p : builtin_profiles(1.3)) {
      const auto back = profile_from_json(profile_to_json(p));
      CHECK(back.family() == p.family());
      CHECK(back.parameters() == p.parameters());
      CHECK(back(0.7) == p(0.7));
    }
  }
}
