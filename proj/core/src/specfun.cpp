#include "wgm/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wgm/errors.hpp"

namespace wgm {
namespace {

using std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

void check_finite(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(Errc::NonFinite, "non-finite argument");
}

void check_order(int order) {
  if (order < 0 || order > kMaxBesselOrder)
    fail(Errc::OrderOutOfRange, "order " + std::to_string(order) + " outside [0, 200]");
}

// -log10 |J_n(x)| for n well above x (Debye envelope, crude but monotone).
double envj(int n, double x) {
  return 0.5 * std::log10(6.28 * n) - n * std::log10(1.36 * x / n);
}

// Start index for backward recurrence so that J_0..J_order come out with
// about `digits` significant digits.
int miller_start(int order, double x, double digits) {
  const double ej = envj(std::max(order, 1), x);
  int n = std::max(order, static_cast<int>(1.1 * x) + 1);
  const double target = (ej <= 0.5 * digits) ? digits : 0.5 * digits + ej;
  while (envj(n, x) < target) ++n;
  return n + 12;
}

// J_0..J_{nmax} by Miller recurrence, normalized with 1 = J_0 + 2 sum J_2k.
std::vector<cplx> miller_j(int nmax, cplx z) {
  const double az = std::abs(z);
  const double digits = 18.0 + std::abs(z.imag()) / std::log(10.0);
  int start = miller_start(nmax, az, digits);
  start += start % 2;
  std::vector<cplx> f(static_cast<std::size_t>(start) + 2, cplx{0.0});
  f[start + 1] = 0.0;
  f[start] = 1e-30;
  const cplx two_over_z = 2.0 / z;
  for (int n = start; n >= 1; --n) {
    f[n - 1] = two_over_z * static_cast<double>(n) * f[n] - f[n + 1];
    if (std::abs(f[n - 1]) > 1e250) {
      for (int k = n - 1; k <= start + 1; ++k) f[k] *= 1e-250;
    }
  }
  cplx s = f[0];
  for (int k = 2; k <= start; k += 2) s += 2.0 * f[k];
  f.resize(static_cast<std::size_t>(start) + 1);
  for (auto& v : f) v /= s;
  return f;
}

// J_m and J_{m+1} by ascending series.
std::array<cplx, 2> ascending_j(int m, cplx z) {
  std::array<cplx, 2> out{};
  const cplx half = 0.5 * z;
  const cplx q = -half * half;
  for (int s = 0; s < 2; ++s) {
    const int nu = m + s;
    cplx lead = (nu == 0) ? cplx{1.0} : std::exp(static_cast<double>(nu) * std::log(half) - std::lgamma(nu + 1.0));
    cplx term{1.0};
    cplx sum{1.0};
    for (int k = 1; k < 400; ++k) {
      term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    out[s] = lead * sum;
  }
  return out;
}

BesselPair j_from_array(int m, cplx z, const std::vector<cplx>& j) {
  if (m == 0) return {j[0], -j[1]};
  return {j[m], j[m - 1] - static_cast<double>(m) / z * j[m]};
}

// Y_0 and Y_1 from Neumann series in the normalized J_n.
std::array<cplx, 2> y01(cplx z, const std::vector<cplx>& j) {
  const cplx lg = std::log(0.5 * z) + kEulerGamma;
  cplx s0{0.0};
  cplx s1{0.0};
  const int nmax = static_cast<int>(j.size()) - 1;
  for (int k = 1; 2 * k + 1 <= nmax; ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    s0 += sgn * j[2 * k] / static_cast<double>(k);
    s1 += sgn * (j[2 * k - 1] - j[2 * k + 1]) / static_cast<double>(k);
  }
  const cplx y0 = (2.0 / pi) * lg * j[0] - (4.0 / pi) * s0;
  const cplx y1 = -(2.0 / pi) * j[0] / z + (2.0 / pi) * lg * j[1] + (2.0 / pi) * s1;
  return {y0, y1};
}

BesselPair y_forward(int m, cplx z, cplx y0, cplx y1) {
  if (m == 0) return {y0, -y1};
  cplx prev = y0;
  cplx cur = y1;
  for (int n = 1; n < m; ++n) {
    const cplx next = 2.0 * static_cast<double>(n) / z * cur - prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev - static_cast<double>(m) / z * cur};
}

}  // namespace

BesselPair bessel_j(int order, cplx z) {
  check_order(order);
  check_finite(z);
  if (z == cplx{0.0}) {
    if (order == 0) return {1.0, 0.0};
    return {0.0, order == 1 ? 0.5 : 0.0};
  }
  if (std::abs(z) <= 2.0 * std::sqrt(order + 1.0)) {
    const auto js = ascending_j(order, z);
    return {js[0], static_cast<double>(order) / z * js[0] - js[1]};
  }
  const auto j = miller_j(order + 1, z);
  return j_from_array(order, z, j);
}

BesselJY bessel_jy(int order, cplx z) {
  check_order(order);
  check_finite(z);
  if (z == cplx{0.0}) fail(Errc::ArgumentAtOrigin, "Y and H1 are singular at z = 0");
  const auto j = miller_j(std::max(order + 1, 2), z);
  BesselJY out;
  if (std::abs(z) <= 2.0 * std::sqrt(order + 1.0)) {
    const auto js = ascending_j(order, z);
    out.j = {js[0], static_cast<double>(order) / z * js[0] - js[1]};
  } else {
    out.j = j_from_array(order, z, j);
  }
  const auto y = y01(z, j);
  out.y = y_forward(order, z, y[0], y[1]);
  return out;
}

BesselPair bessel_y(int order, cplx z) { return bessel_jy(order, z).y; }

BesselPair hankel1(int order, cplx z) {
  if (z.imag() < -5.0) fail(Errc::RangeExceeded, "hankel1 supports Im z >= -5");
  const auto jy = bessel_jy(order, z);
  const cplx i{0.0, 1.0};
  return {jy.j.value + i * jy.y.value, jy.j.derivative + i * jy.y.derivative};
}

namespace {

constexpr double kAi0 = 0.35502805388781723926;
constexpr double kAip0 = -0.25881940379280679840;

// One Taylor step of y'' = x y from x0 to x0 + h.
void airy_step(double x0, double h, double& y, double& dy) {
  // c_{n+2} = (x0 c_n + c_{n-1}) / ((n+2)(n+1))
  double cm1 = 0.0;
  double c0 = y;
  double c1 = dy;
  double hn = 1.0;
  double val = c0 + c1 * h;
  double der = c1;
  double cprev = c0;  // c_{n}
  double ccur = c1;   // c_{n+1}
  double cpp = cm1;   // c_{n-1}
  double prev_term = std::abs(c1 * h);
  for (int n = 0; n < 200; ++n) {
    const double cnext = (x0 * cprev + cpp) / ((n + 2.0) * (n + 1.0));
    hn *= h;  // h^{n+1}
    der += (n + 2.0) * cnext * hn;
    const double term = cnext * hn * h;
    val += term;
    cpp = cprev;
    cprev = ccur;
    ccur = cnext;
    const double scale = std::abs(val) + std::abs(der * h) + 1e-300;
    if (n > 4 && std::abs(term) + prev_term < 1e-19 * scale) break;
    prev_term = std::abs(term);
  }
  y = val;
  dy = der;
}

void airy_integrate(double x0, double x1, double& y, double& dy) {
  double x = x0;
  while (x != x1) {
    const double hmax = std::min(0.5, 1.5 / std::sqrt(std::max(std::abs(x), 1.0)));
    double h = x1 - x;
    if (std::abs(h) > hmax) h = std::copysign(hmax, h);
    airy_step(x, h, y, dy);
    x = (std::abs(x1 - (x + h)) < 1e-15) ? x1 : x + h;
  }
}

// Ai(x), Ai'(x) for x >= 8 from the decaying asymptotic series.
void airy_asymptotic_positive(double x, double& ai, double& aip) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double u = 1.0;
  double su = 1.0;
  double sv = 1.0;
  double zk = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    zk *= -zeta;
    const double tu = u / zk;
    if (std::abs(tu) > last) break;
    last = std::abs(tu);
    su += tu;
    sv += v / zk;
    if (last < 1e-18) break;
  }
  const double e = std::exp(-zeta) / (2.0 * std::sqrt(pi));
  ai = e / std::pow(x, 0.25) * su;
  aip = -e * std::pow(x, 0.25) * sv;
}

void airy_ai(double x, double& ai, double& aip) {
  if (x >= 8.0) {
    airy_asymptotic_positive(x, ai, aip);
  } else if (x > 2.0) {
    airy_asymptotic_positive(8.0, ai, aip);
    airy_integrate(8.0, x, ai, aip);
  } else {
    ai = kAi0;
    aip = kAip0;
    airy_integrate(0.0, x, ai, aip);
  }
}

}  // namespace

AirySample airy_mirror(double z) {
  if (!std::isfinite(z)) fail(Errc::NonFinite, "non-finite Airy argument");
  if (std::abs(z) > 50.0) fail(Errc::RangeExceeded, "airy_mirror supports |z| <= 50");
  double ai = 0.0;
  double aip = 0.0;
  airy_ai(-z, ai, aip);
  return {ai, -aip};
}

AiryZero airy_zero(int j) {
  if (j < 0 || j > 50) fail(Errc::IndexOutOfRange, "airy_zero supports 0 <= j <= 50");
  const double t = 3.0 * pi * (4.0 * j + 3.0) / 8.0;
  const double t2 = 1.0 / (t * t);
  double z = std::pow(t, 2.0 / 3.0) * (1.0 + t2 * (5.0 / 48.0 - t2 * 5.0 / 36.0));
  // Sign-scan bracket around the asymptotic guess, then safeguarded Newton.
  double lo = z - 0.25;
  double hi = z + 0.25;
  double flo = airy_mirror(lo).value;
  double fhi = airy_mirror(hi).value;
  while (flo * fhi > 0.0) {
    lo -= 0.1;
    hi += 0.1;
    flo = airy_mirror(lo).value;
    fhi = airy_mirror(hi).value;
  }
  for (int it = 0; it < 60; ++it) {
    const auto s = airy_mirror(z);
    if (s.value == 0.0) break;
    if ((s.value > 0.0) == (flo > 0.0)) {
      lo = z;
    } else {
      hi = z;
    }
    double next = z - s.value / s.derivative;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - z) < 1e-15 * z) {
      z = next;
      break;
    }
    z = next;
  }
  return {z, airy_mirror(z).derivative};
}

std::vector<double> gauss_hermite_all(int ell_max, double z) {
  std::vector<double> psi(static_cast<std::size_t>(ell_max) + 1);
  psi[0] = std::pow(pi, -0.25) * std::exp(-0.5 * z * z);
  if (ell_max >= 1) psi[1] = std::sqrt(2.0) * z * psi[0];
  for (int n = 1; n < ell_max; ++n)
    psi[n + 1] = std::sqrt(2.0 / (n + 1.0)) * z * psi[n] - std::sqrt(n / (n + 1.0)) * psi[n - 1];
  return psi;
}

GaussHermiteSample gauss_hermite(int ell, double z) {
  if (ell < 0 || ell > 64) fail(Errc::OrderOutOfRange, "gauss_hermite supports 0 <= ell <= 64");
  if (!std::isfinite(z) || std::abs(z) > 30.0) fail(Errc::RangeExceeded, "gauss_hermite supports |z| <= 30");
  const auto psi = gauss_hermite_all(ell + 1, z);
  const double lower = ell > 0 ? std::sqrt(ell / 2.0) * psi[ell - 1] : 0.0;
  return {ell, psi[ell], lower - std::sqrt((ell + 1) / 2.0) * psi[ell + 1]};
}

double gh_halfline_norm(int ell_odd) {
  if (ell_odd < 0 || ell_odd % 2 == 0) fail(Errc::EvenOrder, "half-line norm defined for odd orders");
  return std::numbers::sqrt2;
}

}  // namespace wgm
