#include "wgm/fdpml.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "wgm/errors.hpp"

namespace wgm {

RadialGrid make_grid(double R, int N, double r_max, double pml_start, double theta) {
  if (!(R > 0.0)) fail(Errc::NonPositiveRadius, "R must be positive");
  if (N < 500) fail(Errc::InvalidParameters, "grid needs N >= 500");
  if (!(theta > 0.0 && theta < std::numbers::pi / 3.0)) fail(Errc::InvalidParameters, "theta must lie in (0, pi/3)");
  if (r_max == 0.0) r_max = 3.0 * R;
  if (pml_start == 0.0) pml_start = 2.0 * R;
  if (!(pml_start >= 1.2 * R) || !(r_max > pml_start)) fail(Errc::InvalidParameters, "need 1.2 R <= pml_start < r_max");
  RadialGrid g;
  g.R = R;
  g.N = N;
  g.theta = theta;
  g.index_R = static_cast<int>(std::lround(N * R / r_max));
  if (g.index_R < 1) fail(Errc::GridMisaligned, "R falls below the first grid cell");
  g.h = R / g.index_R;
  g.r_max = N * g.h;
  g.index_pml = static_cast<int>(std::lround(pml_start / g.h));
  g.pml_start = g.index_pml * g.h;
  if (g.index_pml >= N || g.pml_start < 1.2 * R) fail(Errc::GridMisaligned, "pml_start does not fit the grid");
  return g;
}

namespace {

struct Metric {
  cplx rt;     // stretched coordinate
  cplx gamma;  // d r~ / d r
};

Metric metric(const RadialGrid& g, double r) {
  if (r <= g.pml_start) return {r, 1.0};
  const cplx e = std::polar(1.0, g.theta);
  return {g.pml_start + e * (r - g.pml_start), e};
}

}  // namespace

DiscreteEVP assemble(const IndexProfile& profile, int p, int m, const RadialGrid& g) {
  if (p != 1 && p != -1) fail(Errc::InvalidParameters, "p must be +1 or -1");
  if (m == 0) fail(Errc::UnsupportedM, "m = 0 needs a Neumann condition at the origin");
  if (std::abs(g.index_R * g.h - profile.radius()) > 1e-12 * profile.radius())
    fail(Errc::GridMisaligned, "R is not a grid node");
  m = std::abs(m);
  const int n = g.N - 1;
  DiscreteEVP e;
  e.grid = g;
  e.p = p;
  e.m = m;
  e.diag.assign(n, 0.0);
  e.off.assign(n > 0 ? n - 1 : 0, 0.0);
  e.B.assign(n, 0.0);
  const double h = g.h;
  const double m2 = static_cast<double>(m) * m;
  // flux a r~ / gamma at r_{i + 1/2}, i = 0..N-1; midpoints never sit on R
  std::vector<cplx> flux(g.N);
  for (int i = 0; i < g.N; ++i) {
    const double r = (i + 0.5) * h;
    const auto mt = metric(g, r);
    flux[i] = std::pow(profile(r), p - 1) * mt.rt / mt.gamma;
  }
  for (int i = 1; i < g.N; ++i) {
    const double r = g.node(i);
    double a;
    double b;
    if (i == g.index_R) {
      const double nin = profile.inner(r);
      a = 0.5 * (std::pow(nin, p - 1) + 1.0);
      b = 0.5 * (std::pow(nin, p + 1) + 1.0);
    } else {
      const double nr = profile(r);
      a = std::pow(nr, p - 1);
      b = std::pow(nr, p + 1);
    }
    Metric mt = metric(g, r);
    if (i == g.index_pml) mt.gamma = 0.5 * (1.0 + std::polar(1.0, g.theta));
    const int u = i - 1;
    e.diag[u] = (flux[i - 1] + flux[i]) / h + h * a * m2 * mt.gamma / mt.rt;
    e.B[u] = h * b * mt.rt * mt.gamma;
    if (u + 1 < n) e.off[u] = -flux[i] / h;
  }
  return e;
}

namespace {

using cvec = std::vector<cplx>;

cplx bilinear(const cvec& x, const cvec& y) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(const cvec& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

cvec apply_A(const DiscreteEVP& e, const cvec& x) {
  const std::size_t n = x.size();
  cvec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = e.diag[i] * x[i];
    if (i > 0) s += e.off[i - 1] * x[i - 1];
    if (i + 1 < n) s += e.off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

cvec apply_B(const DiscreteEVP& e, const cvec& x) {
  cvec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = e.B[i] * x[i];
  return y;
}

struct Factor {
  cvec dl, d, du, du2;
  std::vector<lapack_int> ipiv;

  // false when U has a zero pivot
  bool build(const DiscreteEVP& e, cplx shift) {
    const std::size_t n = e.diag.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = e.diag[i] - shift * e.B[i];
    dl = e.off;
    du = e.off;
    du2.assign(n > 2 ? n - 2 : 1, 0.0);
    ipiv.assign(n, 0);
    const lapack_int info = LAPACKE_zgttrf(static_cast<lapack_int>(n), reinterpret_cast<lapack_complex_double*>(dl.data()),
                                           reinterpret_cast<lapack_complex_double*>(d.data()),
                                           reinterpret_cast<lapack_complex_double*>(du.data()),
                                           reinterpret_cast<lapack_complex_double*>(du2.data()), ipiv.data());
    if (info < 0) fail(Errc::FactorizationSingular, "zgttrf rejected its arguments");
    if (info > 0) return false;
    // a pivot tiny against the diagonal scale is as bad as an exact zero
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(e.diag[i]));
    for (const auto& v : d)
      if (std::abs(v) < 1e-15 * scale) return false;
    return true;
  }

  void solve(cvec& b) const {
    const auto n = static_cast<lapack_int>(d.size());
    const lapack_int info = LAPACKE_zgttrs(LAPACK_COL_MAJOR, 'N', n, 1, reinterpret_cast<const lapack_complex_double*>(dl.data()),
                                           reinterpret_cast<const lapack_complex_double*>(d.data()),
                                           reinterpret_cast<const lapack_complex_double*>(du.data()),
                                           reinterpret_cast<const lapack_complex_double*>(du2.data()), ipiv.data(),
                                           reinterpret_cast<lapack_complex_double*>(b.data()), n);
    if (info != 0) fail(Errc::FactorizationSingular, "zgttrs failed");
  }
};

Factor factor_near(const DiscreteEVP& e, cplx& shift) {
  Factor f;
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (f.build(e, shift)) return f;
    shift *= 1.0 + 1e-9 * (attempt + 1);
  }
  fail(Errc::FactorizationSingular, "shift sits on an eigenvalue; re-shifting did not help");
}

void deflate(cvec& y, const std::vector<Eigenpair>& found, const DiscreteEVP& e) {
  for (const auto& v : found) {
    const cvec Bv = apply_B(e, v.w);
    const cplx c = bilinear(Bv, y);  // v^T B v = 1
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * v.w[i];
  }
}

}  // namespace

std::vector<Eigenpair> solve_near(const DiscreteEVP& e, cplx shift, int count) {
  if (count < 1) fail(Errc::InvalidParameters, "count must be positive");
  const std::size_t n = e.diag.size();
  std::vector<Eigenpair> found;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  constexpr int kMaxIter = 300;
  constexpr int kMaxShiftUpdates = 3;

  for (int which = 0; which < count; ++which) {
    cplx sigma = shift;
    Factor f = factor_near(e, sigma);
    int updates = 0;
    cvec x(n);
    for (auto& v : x) v = {unif(rng), unif(rng)};
    deflate(x, found, e);
    cplx lambda = sigma;
    cplx previous = std::numeric_limits<double>::infinity();
    bool done = false;
    int it = 0;
    for (; it < kMaxIter && !done; ++it) {
      cvec y = apply_B(e, x);
      f.solve(y);
      deflate(y, found, e);
      const double ny = norm2(y);
      for (auto& v : y) v /= ny;
      const cvec Ay = apply_A(e, y);
      const cvec By = apply_B(e, y);
      lambda = bilinear(y, Ay) / bilinear(y, By);
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) res += std::norm(Ay[i] - lambda * By[i]);
      res = std::sqrt(res) / (norm2(Ay) + std::abs(lambda) * norm2(By));
      const double change = std::abs(lambda - previous) / std::abs(lambda);
      previous = lambda;
      x = std::move(y);
      // the residual floors near 1e-13 from roundoff, so a settled quotient counts
      if (res < 1e-14 || (change < 1e-12 && res < 1e-8)) {
        done = true;
      } else if (change < 1e-6 && updates < kMaxShiftUpdates) {
        sigma = lambda;
        f = factor_near(e, sigma);
        ++updates;
      }
    }
    if (!done) {
      std::ostringstream msg;
      msg << "inverse iteration did not converge near " << shift;
      fail(Errc::NoConvergence, msg.str());
    }
    // B-normalize, then fix the sign so the largest entry has Re > 0
    const cplx s = std::sqrt(bilinear(x, apply_B(e, x)));
    for (auto& v : x) v /= s;
    const auto peak = std::max_element(x.begin(), x.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    if (peak->real() < 0.0)
      for (auto& v : x) v = -v;
    Eigenpair pr;
    pr.k2 = lambda;
    pr.k = std::sqrt(lambda);
    if (pr.k.real() < 0.0) pr.k = -pr.k;
    pr.w = std::move(x);
    pr.iterations = it;
    found.push_back(std::move(pr));
  }
  return found;
}

FdResult refine_extrapolated(const IndexProfile& profile, int p, int m, cplx seed_k, const FdOptions& o) {
  FdResult out;
  cplx shift = seed_k * seed_k;
  for (int level = 0; level < 3; ++level) {
    const int N = o.N << level;
    const auto grid = make_grid(profile.radius(), N, o.r_max, o.pml_start, o.theta);
    const auto evp = assemble(profile, p, m, grid);
    auto pairs = solve_near(evp, shift, 1);
    out.level_k.push_back(pairs.front().k);
    shift = pairs.front().k2;
    if (level == 2) {
      out.finest = std::move(pairs.front());
      out.finest_grid = grid;
    }
  }
  const cplx k1 = out.level_k[0];
  const cplx k2 = out.level_k[1];
  const cplx k4 = out.level_k[2];
  const cplx ext = k4 + (k4 - k2) / 3.0;
  const cplx ext_coarse = k2 + (k2 - k1) / 3.0;
  out.consistency = std::abs(ext - ext_coarse) / std::abs(ext);
  const double d1 = std::abs(k2 - k1);
  const double d2 = std::abs(k4 - k2);
  // second order means each halving cuts the change by about 4
  if (d2 > 1e-13 * std::abs(k4) && !(d1 / d2 > 2.0 && d1 / d2 < 8.0)) {
    std::ostringstream msg;
    msg << "grid changes " << d1 << ", " << d2 << " are not second order; widen the PML or change theta";
    fail(Errc::NonMonotoneConvergence, msg.str());
  }
  out.imag_resolved = std::abs(ext.imag()) >= 1e-13 * ext.real();
  out.resonance = make_resonance(ext, m, p, Provenance::fd);
  return out;
}

FdProfile fd_mode_profile(const Eigenpair& pair, const RadialGrid& g) {
  FdProfile out;
  std::vector<double> interior;
  for (int i = 1; i <= g.index_pml && i - 1 < static_cast<int>(pair.w.size()); ++i) {
    const double r = g.node(i);
    out.r.push_back(r);
    out.re_w.push_back(pair.w[i - 1].real());
    out.im_w.push_back(pair.w[i - 1].imag());
    if (i < g.index_R) interior.push_back(pair.w[i - 1].real());
  }
  out.radial_index = radial_index(interior);
  return out;
}

}  // namespace wgm
