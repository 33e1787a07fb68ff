#include "wgm/series.hpp"

#include <cmath>

#include "wgm/errors.hpp"

namespace wgm {
namespace {

void check_compatible(const PowerSeries& s, const PowerSeries& t) {
  if (!(s.beta == t.beta)) fail(Errc::BetaMismatch, "series with different exponent steps");
  if (s.order() != t.order()) fail(Errc::OrderMismatch, "series with different truncation orders");
}

}  // namespace

PowerSeries series_add(const PowerSeries& s, const PowerSeries& t) {
  check_compatible(s, t);
  PowerSeries out = s;
  for (std::size_t q = 0; q < out.order(); ++q) out.coeffs[q] += t.coeffs[q];
  return out;
}

PowerSeries series_mul(const PowerSeries& s, const PowerSeries& t) {
  check_compatible(s, t);
  PowerSeries out{s.beta, std::vector<double>(s.order(), 0.0)};
  for (std::size_t a = 0; a < s.order(); ++a)
    for (std::size_t b = 0; a + b < s.order(); ++b) out.coeffs[a + b] += s.coeffs[a] * t.coeffs[b];
  return out;
}

PowerSeries series_scale(const PowerSeries& s, double c) {
  PowerSeries out = s;
  for (auto& v : out.coeffs) v *= c;
  return out;
}

PowerSeries series_sqrt_one_plus(const PowerSeries& s) {
  PowerSeries out{s.beta, std::vector<double>(s.order(), 0.0)};
  if (s.order() == 0) return out;
  const double a0 = 1.0 + s.coeffs[0];
  if (!(a0 > 0.0)) fail(Errc::BranchViolation, "sqrt(1 + S) needs 1 + S_0 > 0");
  const double t0 = std::sqrt(a0);
  out.coeffs[0] = t0;
  for (std::size_t n = 1; n < s.order(); ++n) {
    double acc = s.coeffs[n];
    for (std::size_t k = 1; k < n; ++k) acc -= out.coeffs[k] * out.coeffs[n - k];
    out.coeffs[n] = acc / (2.0 * t0);
  }
  return out;
}

char case_letter(Case c) {
  switch (c) {
    case Case::A: return 'A';
    case Case::B: return 'B';
    case Case::C: return 'C';
  }
  return '?';
}

Rational case_beta(Case c) { return c == Case::A ? Rational{1, 3} : Rational{1, 2}; }

ResonanceExpansion lambda_to_expansion(const PowerSeries& lambda, Case c, double anchor, int p, int j) {
  if (!(lambda.beta == case_beta(c))) fail(Errc::CaseBetaMismatch, "lambda exponent step does not match the case");
  PowerSeries shifted{lambda.beta, std::vector<double>(lambda.order() + 2, 0.0)};
  for (std::size_t q = 0; q < lambda.order(); ++q) shifted.coeffs[q + 2] = lambda.coeffs[q];
  return {p, j, c, anchor, series_sqrt_one_plus(shifted)};
}

double evaluate_expansion(const ResonanceExpansion& e, int m, std::size_t terms) {
  if (terms > e.series.order()) fail(Errc::TermsExceedOrder, "more terms requested than the expansion holds");
  if (m < 1) fail(Errc::InvalidParameters, "m must be positive");
  const double t = std::pow(static_cast<double>(m), -e.series.beta.value());
  double sum = 0.0;
  double tp = 1.0;
  for (std::size_t l = 0; l < terms; ++l) {
    sum += e.series.coeffs[l] * tp;
    tp *= t;
  }
  return m * e.anchor * sum;
}

}  // namespace wgm
