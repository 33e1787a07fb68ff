#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wgm/polynomial.hpp"
#include "wgm/series.hpp"

namespace wgm {

enum class Family { constant, ilchenko, fisheye, quadratic, table, custom };
std::string family_name(Family f);

namespace detail {
struct ProfileModel;
}

// Radial index n(r), equal to 1 beyond R. Derivatives always refer to the
// smooth inner branch, so at r = R they are limits from inside.
class IndexProfile {
 public:
  using Callback = std::function<double(double)>;

  static IndexProfile constant(double n0, double R);
  // n0 sqrt(1 + delta R (1 - r/R))
  static IndexProfile ilchenko(double n0, double delta, double R);
  // alpha / (1 + r^2/R^2), alpha > 2
  static IndexProfile fisheye(double alpha, double R);
  // alpha - beta r^2 / 2
  static IndexProfile quadratic(double alpha, double beta, double R);
  // monotone-cubic interpolation of samples covering [0, R]
  static IndexProfile table(std::vector<double> r, std::vector<double> n, double R);
  // user callback for the inner branch; derivatives by Richardson central differences
  static IndexProfile custom(Callback inner, double R);

  double radius() const;
  Family family() const;
  const std::map<std::string, double>& parameters() const;

  double operator()(double r) const;
  double inner(double r) const;
  double derivative(double r, int q) const;
  // Taylor coefficients n^{(k)}(r)/k!, k < order.
  Poly taylor(double r, std::size_t order) const;
  // Highest derivative order the model can supply reliably.
  std::size_t max_derivative_order() const;

 private:
  explicit IndexProfile(std::shared_ptr<const detail::ProfileModel> model);
  std::shared_ptr<const detail::ProfileModel> model_;
};

IndexProfile builtin_profile(Family family, const std::map<std::string, double>& params);
IndexProfile profile_from_json(const nlohmann::json& doc);
nlohmann::json profile_to_json(const IndexProfile& profile);

enum class Side { inner, outer };

// W(r) = (r n(r))^{-2}; `side` selects the branch at r = R.
double effective_potential(const IndexProfile& profile, double r, Side side = Side::inner);
// W'(r) on the inner branch for r <= R, 0-index branch outside.
double effective_potential_derivative(const IndexProfile& profile, double r, Side side = Side::inner);

struct WellClassification {
  Case wcase = Case::A;
  double R = 1.0;
  double n0 = 1.0;           // n(R^-)
  double kappa_eff = 0.0;    // 1/R + n'(R)/n(R), 1/length
  double kappa_breve = 0.0;  // R kappa_eff
  double mu_breve = 0.0;     // 2 - R^2 n''(R)/n(R)
  double W0 = 0.0;           // bottom of the well, 1/length^2
  // case C
  double R0 = 0.0;
  double n_R0 = 0.0;
  double mu0_breve = 0.0;
  double eta3 = 0.0;
  double eta4 = 0.0;
  // Taylor coefficients of n~(xi) = n(r_*(1 + xi)) at r_* = R (A, B) or R0 (C).
  Poly ntilde;
  // Interior local minima of W found by sign scan; more than one sets the warning.
  std::vector<double> local_minima;
  bool multiwell_warning = false;

  double anchor() const;  // 1/(R n0) or 1/(R0 n(R0))
};

inline constexpr double kZeroCurvatureTolerance = 1e-9;

WellClassification classify(const IndexProfile& profile, double tolerance = kZeroCurvatureTolerance);

struct WkbAction {
  double S0;
  double T;
};
WkbAction wkb_action(double n_at_R);

}  // namespace wgm
