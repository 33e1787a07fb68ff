#include "wgm/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

// boost's pchip calls isnan unqualified
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <nlohmann/json.hpp>

#include "wgm/errors.hpp"

namespace wgm {

namespace detail {

struct ProfileModel {
  Family family = Family::constant;
  double R = 1.0;
  std::map<std::string, double> params;

  virtual ~ProfileModel() = default;
  virtual Poly taylor(double r, std::size_t order) const = 0;
  virtual double value(double r) const { return taylor(r, 1)[0]; }
  virtual std::size_t max_order() const { return 64; }
};

}  // namespace detail

namespace {

using detail::ProfileModel;

// Families written once as a function of a Taylor jet.
struct JetModel final : ProfileModel {
  std::function<Poly(const Poly&)> f;
  Poly taylor(double r, std::size_t order) const override { return f(jet::variable(r, std::max<std::size_t>(order, 1))); }
};

// Cubic Hermite pieces with monotone (PCHIP) node slopes.
struct TableModel final : ProfileModel {
  std::vector<double> r;
  std::vector<double> n;
  std::vector<double> slope;

  Poly taylor(double x, std::size_t order) const override {
    const std::size_t last = r.size() - 2;
    std::size_t i = static_cast<std::size_t>(std::upper_bound(r.begin(), r.end(), x) - r.begin());
    i = (i == 0) ? 0 : std::min(i - 1, last);
    const double h = r[i + 1] - r[i];
    const double d = (n[i + 1] - n[i]) / h;
    // p(s) = n_i + m_i s + c2 s^2 + c3 s^3 with s = x - r_i
    const double c2 = (3.0 * d - 2.0 * slope[i] - slope[i + 1]) / h;
    const double c3 = (slope[i] + slope[i + 1] - 2.0 * d) / (h * h);
    const Poly local{n[i], slope[i], c2, c3};
    Poly shifted = poly::affine(local, x - r[i], 1.0);
    shifted.resize(std::max<std::size_t>(order, 1), 0.0);
    return shifted;
  }
};

struct CustomModel final : ProfileModel {
  IndexProfile::Callback f;

  double value(double r) const override { return f(r); }
  std::size_t max_order() const override { return 4; }

  double central(double x, int q, double h) const {
    switch (q) {
      case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
      case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
      case 3: return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h * h * h);
      default: return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2 * h)) / (h * h * h * h);
    }
  }

  Poly taylor(double x, std::size_t order) const override {
    if (order > 5) fail(Errc::InsufficientDerivatives, "callback profiles supply derivatives up to order 4");
    static constexpr double kStep[5] = {0.0, 1e-4, 1e-3, 5e-3, 1e-2};
    Poly out(std::max<std::size_t>(order, 1), 0.0);
    out[0] = f(x);
    double fact = 1.0;
    for (std::size_t q = 1; q < out.size(); ++q) {
      fact *= static_cast<double>(q);
      const double h = kStep[q] * R;
      const int qi = static_cast<int>(q);
      const double rich = (4.0 * central(x, qi, 0.5 * h) - central(x, qi, h)) / 3.0;
      out[q] = rich / fact;
    }
    return out;
  }
};

void validate(const ProfileModel& m) {
  if (!(m.R > 0.0) || !std::isfinite(m.R)) fail(Errc::InvalidParameters, "R must be positive");
  constexpr int kSamples = 2000;
  for (int i = 0; i <= kSamples; ++i) {
    const double r = m.R * i / kSamples;
    const double v = m.value(r);
    if (!std::isfinite(v) || !(v > 1.0))
      fail(Errc::InvalidParameters, "index must exceed 1 on [0, R]; n(" + std::to_string(r) + ") = " + std::to_string(v));
  }
}

std::shared_ptr<const ProfileModel> make_jet(Family family, double R, std::map<std::string, double> params,
                                             std::function<Poly(const Poly&)> f) {
  auto m = std::make_shared<JetModel>();
  m->family = family;
  m->R = R;
  m->params = std::move(params);
  m->f = std::move(f);
  validate(*m);
  return m;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::constant: return "constant";
    case Family::ilchenko: return "ilchenko";
    case Family::fisheye: return "fisheye";
    case Family::quadratic: return "quadratic";
    case Family::table: return "table";
    case Family::custom: return "custom";
  }
  return "unknown";
}

IndexProfile::IndexProfile(std::shared_ptr<const detail::ProfileModel> model) : model_(std::move(model)) {}

IndexProfile IndexProfile::constant(double n0, double R) {
  return IndexProfile(make_jet(Family::constant, R, {{"n0", n0}},
                               [n0](const Poly& x) { return jet::constant(n0, x.size()); }));
}

IndexProfile IndexProfile::ilchenko(double n0, double delta, double R) {
  if (!(delta >= 0.0)) fail(Errc::InvalidParameters, "ilchenko needs delta >= 0");
  return IndexProfile(make_jet(Family::ilchenko, R, {{"n0", n0}, {"delta", delta}}, [n0, delta, R](const Poly& x) {
    Poly u = poly::scale(x, -delta);
    u[0] += 1.0 + delta * R;
    return poly::scale(jet::sqrt(u), n0);
  }));
}

IndexProfile IndexProfile::fisheye(double alpha, double R) {
  if (!(alpha > 2.0)) fail(Errc::InvalidParameters, "fisheye needs alpha > 2");
  return IndexProfile(make_jet(Family::fisheye, R, {{"alpha", alpha}}, [alpha, R](const Poly& x) {
    Poly d = poly::scale(jet::mul(x, x), 1.0 / (R * R));
    d[0] += 1.0;
    return poly::scale(jet::reciprocal(d), alpha);
  }));
}

IndexProfile IndexProfile::quadratic(double alpha, double beta, double R) {
  if (!(beta > 0.0)) fail(Errc::InvalidParameters, "quadratic needs beta > 0");
  return IndexProfile(make_jet(Family::quadratic, R, {{"alpha", alpha}, {"beta", beta}}, [alpha, beta](const Poly& x) {
    Poly v = poly::scale(jet::mul(x, x), -0.5 * beta);
    v[0] += alpha;
    return v;
  }));
}

IndexProfile IndexProfile::table(std::vector<double> r, std::vector<double> n, double R) {
  if (r.size() != n.size() || r.size() < 4) fail(Errc::InvalidParameters, "table needs at least 4 (r, n) pairs");
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i] > r[i - 1])) fail(Errc::InvalidParameters, "table radii must increase strictly");
  if (r.front() > 0.0 || r.back() < R) fail(Errc::InvalidParameters, "table must cover [0, R]");
  auto m = std::make_shared<TableModel>();
  m->family = Family::table;
  m->R = R;
  m->r = r;
  m->n = n;
  boost::math::interpolators::pchip<std::vector<double>> spline(std::move(r), std::move(n));
  m->slope.resize(m->r.size());
  for (std::size_t i = 0; i < m->r.size(); ++i) m->slope[i] = spline.prime(m->r[i]);
  validate(*m);
  return IndexProfile(m);
}

IndexProfile IndexProfile::custom(Callback inner, double R) {
  auto m = std::make_shared<CustomModel>();
  m->family = Family::custom;
  m->R = R;
  m->f = std::move(inner);
  validate(*m);
  return IndexProfile(m);
}

double IndexProfile::radius() const { return model_->R; }
Family IndexProfile::family() const { return model_->family; }
const std::map<std::string, double>& IndexProfile::parameters() const { return model_->params; }
double IndexProfile::operator()(double r) const { return r > model_->R ? 1.0 : model_->value(r); }
double IndexProfile::inner(double r) const { return model_->value(r); }
std::size_t IndexProfile::max_derivative_order() const { return model_->max_order(); }

double IndexProfile::derivative(double r, int q) const {
  if (q < 0) fail(Errc::InvalidParameters, "negative derivative order");
  const Poly t = taylor(r, static_cast<std::size_t>(q) + 1);
  return t[q] * std::tgamma(q + 1.0);
}

Poly IndexProfile::taylor(double r, std::size_t order) const {
  if (order > model_->max_order() + 1)
    fail(Errc::InsufficientDerivatives, "profile supplies derivatives up to order " + std::to_string(model_->max_order()));
  return model_->taylor(r, order);
}

IndexProfile builtin_profile(Family family, const std::map<std::string, double>& params) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) fail(Errc::InvalidParameters, family_name(family) + " profile needs parameter '" + key + "'");
    return it->second;
  };
  const double R = get("R");
  switch (family) {
    case Family::constant: return IndexProfile::constant(get("n0"), R);
    case Family::ilchenko: return IndexProfile::ilchenko(get("n0"), get("delta"), R);
    case Family::fisheye: return IndexProfile::fisheye(get("alpha"), R);
    case Family::quadratic: return IndexProfile::quadratic(get("alpha"), get("beta"), R);
    default: fail(Errc::InvalidParameters, "builtin_profile covers parametric families only");
  }
}

namespace {

double json_number(const nlohmann::json& doc, const std::string& key) {
  if (!doc.contains(key)) fail(Errc::ConfigError, "profile." + key + ": missing");
  const auto& v = doc.at(key);
  if (!v.is_number()) fail(Errc::ConfigError, "profile." + key + ": expected a number");
  return v.get<double>();
}

std::vector<double> json_array(const nlohmann::json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) fail(Errc::ConfigError, "profile." + key + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : doc.at(key)) {
    if (!v.is_number()) fail(Errc::ConfigError, "profile." + key + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

IndexProfile profile_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail(Errc::ConfigError, "profile: expected an object");
  if (!doc.contains("family") || !doc.at("family").is_string()) fail(Errc::ConfigError, "profile.family: expected a string");
  const auto family = doc.at("family").get<std::string>();
  const double R = json_number(doc, "R");
  if (family == "constant") return IndexProfile::constant(json_number(doc, "n0"), R);
  if (family == "ilchenko") return IndexProfile::ilchenko(json_number(doc, "n0"), json_number(doc, "delta"), R);
  if (family == "fisheye") return IndexProfile::fisheye(json_number(doc, "alpha"), R);
  if (family == "quadratic") return IndexProfile::quadratic(json_number(doc, "alpha"), json_number(doc, "beta"), R);
  if (family == "table") return IndexProfile::table(json_array(doc, "r"), json_array(doc, "n"), R);
  fail(Errc::ConfigError, "profile.family: unknown family '" + family + "'");
}

nlohmann::json profile_to_json(const IndexProfile& profile) {
  nlohmann::json out;
  out["family"] = family_name(profile.family());
  out["R"] = profile.radius();
  for (const auto& [k, v] : profile.parameters()) out[k] = v;
  return out;
}

double effective_potential(const IndexProfile& profile, double r, Side side) {
  if (!(r > 0.0)) fail(Errc::NonPositiveRadius, "W needs r > 0");
  const double R = profile.radius();
  if (r > R || (r == R && side == Side::outer)) return 1.0 / (r * r);
  const double rn = r * profile.inner(r);
  return 1.0 / (rn * rn);
}

double effective_potential_derivative(const IndexProfile& profile, double r, Side side) {
  const double w = effective_potential(profile, r, side);
  const double R = profile.radius();
  if (r > R || (r == R && side == Side::outer)) return -2.0 * w / r;
  const Poly t = profile.taylor(r, 2);
  return -2.0 * w * (1.0 / r + t[1] / t[0]);
}

double WellClassification::anchor() const { return wcase == Case::C ? 1.0 / (R0 * n_R0) : 1.0 / (R * n0); }

namespace {

// 1 + r n'(r)/n(r); W' = -2 W g / r.
double well_g(const IndexProfile& profile, double r) {
  const Poly t = profile.taylor(r, 2);
  return 1.0 + r * t[1] / t[0];
}

Poly scaled_taylor(const IndexProfile& profile, double r) {
  const std::size_t order = std::min<std::size_t>(13, profile.max_derivative_order() + 1);
  Poly t = profile.taylor(r, order);
  double rk = 1.0;
  for (auto& c : t) {
    c *= rk;
    rk *= r;
  }
  return t;
}

void check_continuity(const IndexProfile& profile) {
  constexpr int kSamples = 10000;
  const double R = profile.radius();
  std::vector<double> d(kSamples);
  double prev = profile.inner(0.0);
  for (int i = 1; i <= kSamples; ++i) {
    const double cur = profile.inner(R * i / kSamples);
    d[i - 1] = std::abs(cur - prev);
    prev = cur;
  }
  for (int i = 1; i + 1 < kSamples; ++i) {
    if (d[i] > 1e-6 && d[i] > 50.0 * std::max(d[i - 1], d[i + 1]))
      fail(Errc::DiscontinuousProfile, "index jumps near r = " + std::to_string(R * (i + 0.5) / kSamples));
  }
}

}  // namespace

WellClassification classify(const IndexProfile& profile, double tolerance) {
  if (profile.family() == Family::custom || profile.family() == Family::table) check_continuity(profile);
  WellClassification c;
  const double R = profile.radius();
  c.R = R;
  const Poly tr = profile.taylor(R, 3);
  c.n0 = tr[0];
  c.kappa_breve = 1.0 + R * tr[1] / tr[0];
  c.kappa_eff = c.kappa_breve / R;
  c.mu_breve = 2.0 - R * R * 2.0 * tr[2] / tr[0];

  // Interior minima of W: g changes sign from + to -.
  constexpr int kGrid = 10000;
  double g_prev = well_g(profile, R / kGrid);
  for (int i = 2; i <= kGrid; ++i) {
    const double a = R * (i - 1) / kGrid;
    const double b = R * i / kGrid;
    const double g_cur = well_g(profile, b);
    if (g_prev > 0.0 && g_cur <= 0.0 && i < kGrid) {
      std::uintmax_t iters = 200;
      auto root = boost::math::tools::toms748_solve([&](double r) { return well_g(profile, r); }, a, b, g_prev, g_cur,
                                                    boost::math::tools::eps_tolerance<double>(52), iters);
      c.local_minima.push_back(0.5 * (root.first + root.second));
    }
    g_prev = g_cur;
  }

  if (c.kappa_breve > tolerance) {
    c.wcase = Case::A;
    c.multiwell_warning = !c.local_minima.empty();
  } else if (c.kappa_breve >= -tolerance) {
    c.wcase = Case::B;
    c.multiwell_warning = !c.local_minima.empty();
    if (!(c.mu_breve > 0.0)) fail(Errc::DegenerateWell, "kappa = 0 with non-positive hessian");
  } else {
    c.wcase = Case::C;
    if (c.local_minima.empty()) fail(Errc::NoInteriorMinimum, "negative curvature but no interior minimum bracketed");
    c.multiwell_warning = c.local_minima.size() > 1;
    double best = c.local_minima.front();
    for (double r0 : c.local_minima)
      if (effective_potential(profile, r0) < effective_potential(profile, best)) best = r0;
    c.R0 = best;
  }

  if (c.wcase == Case::C) {
    const Poly t = profile.taylor(c.R0, 5);
    const double r0 = c.R0;
    c.n_R0 = t[0];
    c.mu0_breve = 2.0 - r0 * r0 * 2.0 * t[2] / t[0];
    c.eta3 = 6.0 + r0 * r0 * r0 * 6.0 * t[3] / t[0];
    c.eta4 = 24.0 - r0 * r0 * r0 * r0 * 24.0 * t[4] / t[0];
    c.W0 = effective_potential(profile, r0);
    c.ntilde = scaled_taylor(profile, r0);
    if (!(c.mu0_breve > 0.0)) fail(Errc::DegenerateWell, "interior well with non-positive hessian");
  } else {
    c.W0 = effective_potential(profile, R, Side::inner);
    c.ntilde = scaled_taylor(profile, R);
  }
  return c;
}

WkbAction wkb_action(double n_at_R) {
  if (!(n_at_R > 1.0)) fail(Errc::IndexNotAboveUnity, "WKB action needs n(R) > 1");
  const double T = std::sqrt(1.0 - 1.0 / (n_at_R * n_at_R));
  return {std::atanh(T) - T, T};
}

}  // namespace wgm
