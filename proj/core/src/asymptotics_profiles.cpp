#include <algorithm>
#include <cmath>

#include "asymptotics_detail.hpp"
#include "wgm/errors.hpp"
#include "wgm/specfun.hpp"

namespace wgm {

ResonanceExpansion expansion_for(const WellClassification& wc, int p, int j, int order) {
  const int size = static_cast<int>(wc.ntilde.size());
  switch (wc.wcase) {
    case Case::A: {
      if (order == 0) order = 8;
      const int lam_order = std::clamp(std::min(order - 2, 2 * size - 3), 1, kMaxRecurrenceOrder);
      const auto rec = case_a_recurrence(wc.ntilde, p, j, lam_order);
      return lambda_to_expansion(rec.lambda, Case::A, wc.anchor(), p, j);
    }
    case Case::B: {
      if (size < 4) fail(Errc::InsufficientDerivatives, "case B needs n''' at R");
      return case_b_expansion(wc.n0, wc.R, wc.mu_breve, 6.0 * wc.ntilde[3] / wc.n0, p, j);
    }
    case Case::C: {
      if (order == 0) order = 8;
      const int lam_order = std::clamp(std::min(order - 2, size - 2), 1, kMaxRecurrenceOrder);
      const auto rec = case_c_recurrence(wc.ntilde, p, j, lam_order);
      return lambda_to_expansion(rec.lambda, Case::C, wc.anchor(), p, j);
    }
  }
  fail(Errc::UnsupportedCase, "unknown well case");
}

namespace {

// max |A| on (-inf, a_j]: the first maximum, at the first zero of A'.
double airy_peak() {
  double z = 1.0188;
  for (int it = 0; it < 20; ++it) {
    const auto s = airy_mirror(z);
    z -= s.derivative / (-z * s.value);
  }
  return std::abs(airy_mirror(z).value);
}

double gh_peak(int ell) {
  const double xmax = std::sqrt(2.0 * ell + 1.0) + 3.0;
  double best = 0.0;
  for (int i = 0; i <= 4000; ++i) best = std::max(best, std::abs(gauss_hermite(ell, -xmax + 2.0 * xmax * i / 4000).value));
  return best;
}

double gh_or_zero(const std::vector<double>& v, double x) {
  if (std::abs(x) > 30.0) return 0.0;
  return detail::gh_eval(v, x);
}

}  // namespace

ModeSample quasimode_profile(const WellClassification& wc, int m, int p, int j, const std::vector<double>& grid) {
  if (m < 1) fail(Errc::InvalidParameters, "m must be positive");
  ModeSample out{grid, std::vector<double>(grid.size(), 0.0)};
  const double R = wc.R;
  const double n0 = wc.n0;
  const double w_rate = std::sqrt(1.0 - 1.0 / (n0 * n0));
  for (double r : grid)
    if (!(r > 0.0)) fail(Errc::NonPositiveRadius, "grid must lie in (0, inf)");

  switch (wc.wcase) {
    case Case::A: {
      const double c = std::cbrt(2.0 * wc.kappa_breve);
      const auto zero = airy_zero(j);
      const double t = std::pow(m, -1.0 / 3.0);
      const double g = -std::pow(n0, p) * c / std::sqrt(n0 * n0 - 1.0);
      const double peak = airy_peak();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        double w = 0.0;
        if (r < R) {
          const double z = zero.a + c * std::pow(m, 2.0 / 3.0) * (r / R - 1.0);
          if (z >= -50.0) {
            const auto s = airy_mirror(z);
            w = s.value + t * g * s.derivative;
          }
        } else {
          w = t * g * zero.aprime * std::exp(-w_rate * m * (r / R - 1.0));
        }
        out.w[i] = w / peak;
      }
      break;
    }
    case Case::B: {
      const auto rec = case_b_recurrence(wc.ntilde, p, j, 2);
      const double s = rec.phi[0].scale;
      const double t = std::pow(m, -0.5);
      const double peak = gh_peak(2 * j + 1);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        double w = 0.0;
        if (r < R) {
          const double x = s * std::sqrt(static_cast<double>(m)) * (r / R - 1.0);
          w = gh_or_zero(rec.phi[0].coeffs, x) + t * gh_or_zero(rec.phi[1].coeffs, x);
        } else {
          w = t * detail::exp_eval(rec.psi[1], m * (r / R - 1.0));
        }
        out.w[i] = w / peak;
      }
      break;
    }
    case Case::C: {
      const auto rec = case_c_recurrence(wc.ntilde, p, j, 2);
      const double s = rec.phi[0].scale;
      const double t = std::pow(m, -0.5);
      const double peak = gh_peak(j);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = s * std::sqrt(static_cast<double>(m)) * (grid[i] / wc.R0 - 1.0);
        out.w[i] = (gh_or_zero(rec.phi[0].coeffs, x) + t * gh_or_zero(rec.phi[1].coeffs, x)) / peak;
      }
      break;
    }
  }
  return out;
}

LatticeGaps lattice_gaps(const ResonanceExpansion& ej, const ResonanceExpansion& ej1, int m) {
  if (ej.wcase != ej1.wcase || ej.p != ej1.p) fail(Errc::MixedCases, "gaps need expansions of the same case and polarization");
  const std::size_t terms = std::min(ej.series.order(), ej1.series.order());
  LatticeGaps g;
  g.gap_m = evaluate_expansion(ej, m + 1, terms) - evaluate_expansion(ej, m, terms);
  g.gap_j = evaluate_expansion(ej1, m, terms) - evaluate_expansion(ej, m, terms);
  g.gap_m_leading = ej.anchor;
  const double beta = ej.series.beta.value();
  g.gap_j_leading = ej.anchor * (ej1.series[2] - ej.series[2]) * std::pow(static_cast<double>(m), 1.0 - 2.0 * beta);
  return g;
}

}  // namespace wgm
