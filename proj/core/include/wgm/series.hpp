#pragma once

#include <cstddef>
#include <vector>

namespace wgm {

struct Rational {
  int num = 1;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Truncated power series in t = m^{-beta}; coeffs[q] multiplies t^q and the
// truncation order is coeffs.size().
struct PowerSeries {
  Rational beta;
  std::vector<double> coeffs;

  std::size_t order() const { return coeffs.size(); }
  double operator[](std::size_t q) const { return q < coeffs.size() ? coeffs[q] : 0.0; }
};

PowerSeries series_add(const PowerSeries& s, const PowerSeries& t);
PowerSeries series_mul(const PowerSeries& s, const PowerSeries& t);
PowerSeries series_scale(const PowerSeries& s, double c);
PowerSeries series_sqrt_one_plus(const PowerSeries& s);

enum class Case { A, B, C };
char case_letter(Case c);
Rational case_beta(Case c);

struct ResonanceExpansion {
  int p = 1;
  int j = 0;
  Case wcase = Case::A;
  double anchor = 1.0;
  PowerSeries series;
};

// k/(m*anchor) = sqrt(1 + t^2 lambda(t)).
ResonanceExpansion lambda_to_expansion(const PowerSeries& lambda, Case c, double anchor, int p, int j);

// m * anchor * sum_{l < terms} K^l m^{-l beta}
double evaluate_expansion(const ResonanceExpansion& e, int m, std::size_t terms);

}  // namespace wgm
