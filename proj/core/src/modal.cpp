#include "wgm/modal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wgm/errors.hpp"

namespace wgm {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::modal: return "modal";
    case Provenance::fd: return "fd";
    case Provenance::asymptotic: return "asymptotic";
  }
  return "?";
}

Resonance make_resonance(cplx k, int m, int p, Provenance provenance, std::optional<int> j) {
  Resonance r;
  r.k = k;
  r.m = m;
  r.j = j;
  r.p = p;
  r.provenance = provenance;
  r.q_factor = k.imag() == 0.0 ? std::numeric_limits<double>::infinity() : k.real() / std::abs(k.imag());
  r.multiplicity = m == 0 ? 1 : 2;
  return r;
}

namespace {

void check_inputs(int p, double n0, double R) {
  if (p != 1 && p != -1) fail(Errc::InvalidParameters, "p must be +1 or -1");
  if (!(n0 > 1.0)) fail(Errc::IndexNotAboveUnity, "modal equation needs n0 > 1");
  if (!(R > 0.0)) fail(Errc::NonPositiveRadius, "R must be positive");
}

struct Parts {
  BesselPair J;  // at n0 R k
  BesselPair H;  // at R k
  double np;
};

Parts parts(int p, double n0, double R, int m, cplx k) {
  check_inputs(p, n0, R);
  m = std::abs(m);
  return {bessel_j(m, n0 * R * k), hankel1(m, R * k), std::pow(n0, p)};
}

// f'' from Bessel's equation
cplx second(int m, cplx z, const BesselPair& b) {
  return -b.derivative / z - (1.0 - static_cast<double>(m) * m / (z * z)) * b.value;
}

}  // namespace

cplx modal_function(int p, double n0, double R, int m, cplx k) {
  const auto s = parts(p, n0, R, m, k);
  return s.np * s.J.derivative * s.H.value - s.J.value * s.H.derivative;
}

cplx modal_function_normalized(int p, double n0, double R, int m, cplx k) {
  const auto s = parts(p, n0, R, m, k);
  const cplx a = s.np * s.J.derivative * s.H.value;
  const cplx b = s.J.value * s.H.derivative;
  return (a - b) / (std::abs(a) + std::abs(b));
}

ModalValue modal_function_with_derivative(int p, double n0, double R, int m, cplx k) {
  const auto s = parts(p, n0, R, m, k);
  const int am = std::abs(m);
  const cplx za = n0 * R * k;
  const cplx zb = R * k;
  const cplx J2 = second(am, za, s.J);
  const cplx H2 = second(am, zb, s.H);
  ModalValue v;
  v.f = s.np * s.J.derivative * s.H.value - s.J.value * s.H.derivative;
  v.df = s.np * (n0 * R * J2 * s.H.value + R * s.J.derivative * s.H.derivative) -
         (n0 * R * s.J.derivative * s.H.derivative + R * s.J.value * H2);
  return v;
}

cplx large_j_asymptote(int p, double n0, double R, int m, int j) {
  check_inputs(p, n0, R);
  if (j < 1) fail(Errc::InvalidParameters, "large-j asymptote needs j >= 1");
  const double pi = std::numbers::pi;
  const double re = j * pi / (R * n0) + (2.0 * std::abs(m) + 2.0 - p) * pi / (4.0 * R * n0);
  const double im = std::log((n0 - 1.0) / (n0 + 1.0)) / (2.0 * R * n0);
  return {re, im};
}

SearchBox wgm_search_box(int p, double n0, double R, int m, int j_max) {
  SearchBox b;
  const double base = std::abs(m) / (R * n0);
  b.re_lo = 0.9 * base;
  b.re_hi = std::max(1.6 * base, large_j_asymptote(p, n0, R, m, j_max + 1).real());
  return b;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Winding {
  int p;
  double n0;
  double R;
  int m;
  double scale;  // |k| scale for the boundary-root test

  cplx f(cplx k) const {
    const cplx v = modal_function_normalized(p, n0, R, m, k);
    if (std::abs(v) < 1e-13) fail(Errc::BoundaryRootSuspected, "modal function nearly vanishes on the contour");
    return v;
  }

  // Phase increment along [a, b], bisecting until each step turns by < 0.5 rad.
  double segment(cplx a, cplx fa, cplx b, cplx fb, int depth) const {
    const double d = std::arg(fb / fa);
    if (std::abs(d) < 0.5) return d;
    if (depth > 50 || std::abs(b - a) < 1e-15 * scale)
      fail(Errc::BoundaryRootSuspected, "phase jump unresolved near the contour");
    const cplx c = 0.5 * (a + b);
    const cplx fc = f(c);
    return segment(a, fa, c, fc, depth + 1) + segment(c, fc, b, fb, depth + 1);
  }

  double edge(cplx a, cplx b) const {
    constexpr int n = 32;
    double total = 0.0;
    cplx za = a;
    cplx fa = f(a);
    for (int i = 1; i <= n; ++i) {
      const cplx zb = a + (b - a) * (static_cast<double>(i) / n);
      const cplx fb = f(zb);
      total += segment(za, fa, zb, fb, 0);
      za = zb;
      fa = fb;
    }
    return total;
  }
};

void check_box(const SearchBox& box) {
  if (!(box.re_lo > 0.0) || !(box.re_hi > box.re_lo) || !(box.im_hi > box.im_lo) || box.im_hi > 0.0)
    fail(Errc::InvalidParameters, "search box needs 0 < re_lo < re_hi and im_lo < im_hi <= 0");
}

}  // namespace

int count_zeros(int p, double n0, double R, int m, const SearchBox& box) {
  check_inputs(p, n0, R);
  check_box(box);
  const Winding w{p, n0, R, m, std::abs(cplx{box.re_hi, box.im_lo})};
  const cplx c00{box.re_lo, box.im_lo};
  const cplx c10{box.re_hi, box.im_lo};
  const cplx c11{box.re_hi, box.im_hi};
  const cplx c01{box.re_lo, box.im_hi};
  const double total = w.edge(c00, c10) + w.edge(c10, c11) + w.edge(c11, c01) + w.edge(c01, c00);
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.05 || rounded < 0.0) {
    std::ostringstream msg;
    msg << "winding number " << turns << " is not an integer";
    fail(Errc::QuadratureNotConverged, msg.str());
  }
  return static_cast<int>(rounded);
}

std::optional<cplx> refine_root(int p, double n0, double R, int m, cplx k0, double tol, int max_iter) {
  cplx k = k0;
  for (int it = 0; it < max_iter; ++it) {
    const auto v = modal_function_with_derivative(p, n0, R, m, k);
    if (v.df == cplx{0.0}) return std::nullopt;
    cplx step = v.f / v.df;
    // keep the iterate in the right half plane, where H1 has no cut
    while ((k - step).real() <= 0.0) step *= 0.5;
    k -= step;
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) return std::nullopt;
    if (std::abs(step) <= tol * std::abs(k)) return k;
  }
  return std::nullopt;
}

namespace {

struct Finder {
  int p;
  double n0;
  double R;
  int m;
  int max_depth;
  double tol;
  std::vector<cplx> roots;

  std::optional<int> try_count(const SearchBox& b) const {
    try {
      return count_zeros(p, n0, R, m, b);
    } catch (const Error& e) {
      if (e.code() == Errc::BoundaryRootSuspected) return std::nullopt;
      throw;
    }
  }

  static bool inside(const SearchBox& b, cplx k) {
    const double er = 1e-9 * (b.re_hi - b.re_lo);
    const double ei = 1e-9 * (b.im_hi - b.im_lo);
    return k.real() >= b.re_lo - er && k.real() <= b.re_hi + er && k.imag() >= b.im_lo - ei &&
           k.imag() <= b.im_hi + ei;
  }

  void solve(const SearchBox& b, int count, int depth) {
    if (count == 0) return;
    if (count == 1) {
      const cplx centre{0.5 * (b.re_lo + b.re_hi), 0.5 * (b.im_lo + b.im_hi)};
      const auto k = refine_root(p, n0, R, m, centre, tol);
      if (k && inside(b, *k)) {
        roots.push_back(*k);
        return;
      }
    }
    if (depth >= max_depth) fail(Errc::MaxSubdivisionExceeded, "box subdivision limit reached");
    const bool split_re = (b.re_hi - b.re_lo) >= (b.im_hi - b.im_lo);
    static constexpr double fractions[] = {0.5, 0.47, 0.53, 0.41, 0.59, 0.35, 0.65};
    for (double t : fractions) {
      SearchBox lo = b;
      SearchBox hi = b;
      if (split_re) {
        lo.re_hi = hi.re_lo = b.re_lo + t * (b.re_hi - b.re_lo);
      } else {
        lo.im_hi = hi.im_lo = b.im_lo + t * (b.im_hi - b.im_lo);
      }
      const auto cl = try_count(lo);
      if (!cl) continue;
      const auto ch = try_count(hi);
      if (!ch) continue;
      if (*cl + *ch != count) continue;
      solve(lo, *cl, depth + 1);
      solve(hi, *ch, depth + 1);
      return;
    }
    fail(Errc::QuadratureNotConverged, "no consistent subdivision of the search box");
  }
};

}  // namespace

std::vector<Resonance> find_resonances(int p, double n0, double R, int m, const SearchBox& box) {
  Finder f{p, n0, R, m, box.max_depth, box.newton_tol, {}};
  const int total = count_zeros(p, n0, R, m, box);
  f.solve(box, total, 0);
  std::sort(f.roots.begin(), f.roots.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  std::vector<Resonance> out;
  out.reserve(f.roots.size());
  for (cplx k : f.roots) out.push_back(make_resonance(k, m, p, Provenance::modal));
  return out;
}

std::vector<cplx> mode_field(int p, double n0, double R, int m, cplx k, const std::vector<double>& grid) {
  check_inputs(p, n0, R);
  m = std::abs(m);
  const cplx jr = bessel_j(m, n0 * k * R).value;
  const cplx hr = hankel1(m, k * R).value;
  if (std::abs(hr) < 1e-300 || std::abs(hr) < 1e-14 * std::abs(jr))
    fail(Errc::MatchingDenominatorTiny, "H1_m(kR) is too small to match");
  const cplx ratio = jr / hr;
  std::vector<cplx> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    if (!(r > 0.0)) fail(Errc::NonPositiveRadius, "mode grid must lie in (0, inf)");
    w[i] = r <= R ? bessel_j(m, n0 * k * r).value : ratio * hankel1(m, k * r).value;
  }
  return w;
}

int radial_index(const std::vector<double>& re_w) {
  double peak = 0.0;
  for (double v : re_w) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0;
  const double floor = 1e-8 * peak;
  std::vector<int> signs;
  for (double v : re_w)
    if (std::abs(v) >= floor) signs.push_back(v > 0.0 ? 1 : -1);
  int changes = 0;
  int run = 1;
  for (std::size_t i = 1; i < signs.size(); ++i) {
    if (signs[i] != signs[i - 1]) {
      ++changes;
      if (run == 1 && i >= 2) fail(Errc::GridTooCoarse, "a lobe is resolved by a single sample");
      run = 1;
    } else {
      ++run;
    }
  }
  return changes;
}

namespace {

std::vector<double> interior_grid(double n0, double R, cplx k) {
  // 20 samples per half wavelength, at least 2000
  const auto n = std::max<std::size_t>(2000, static_cast<std::size_t>(20.0 * n0 * std::abs(k) * R / std::numbers::pi));
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = R * (i + 1.0) / n;
  return g;
}

}  // namespace

void label_radial_indices(std::vector<Resonance>& res, double n0, double R) {
  for (auto& r : res) {
    const auto grid = interior_grid(n0, R, r.k);
    const auto w = mode_field(r.p, n0, R, r.m, r.k, grid);
    std::vector<double> re(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) re[i] = w[i].real();
    r.j = radial_index(re);
  }
}

InnerOuterPartition classify_inner_outer(const std::vector<Resonance>& res, double n0, double R) {
  // Interior disk against the annulus of equal area, R < r <= sqrt(2) R, with
  // the outgoing growth exp(|Im k| r) divided out. Inner modes split the mass
  // roughly evenly; outer ones put nearly all of it outside.
  InnerOuterPartition out;
  constexpr int n = 4000;
  const double outer_edge = std::numbers::sqrt2 * R;
  std::vector<double> grid(2 * n);
  for (int i = 0; i < n; ++i) grid[i] = R * (i + 0.5) / n;
  for (int i = 0; i < n; ++i) grid[n + i] = R + (outer_edge - R) * (i + 0.5) / n;
  for (const auto& r : res) {
    std::vector<cplx> w;
    try {
      w = mode_field(r.p, n0, R, r.m, r.k, grid);
    } catch (const Error& e) {
      if (e.code() != Errc::MatchingDenominatorTiny) throw;
      out.outer.push_back(r);  // k sits on a zero of H1_m(R k)
      continue;
    }
    double in = 0.0;
    double ex = 0.0;
    for (int i = 0; i < n; ++i) in += std::norm(w[i]) * grid[i] * (R / n);
    for (int i = n; i < 2 * n; ++i)
      ex += std::norm(w[i]) * std::exp(2.0 * r.k.imag() * (grid[i] - R)) * grid[i] * ((outer_edge - R) / n);
    (3.0 * in >= in + ex ? out.inner : out.outer).push_back(r);
  }
  return out;
}

Resonance modal_resonance(int p, double n0, double R, int m, int j) {
  auto roots = find_resonances(p, n0, R, m, wgm_search_box(p, n0, R, m, j));
  auto inner = classify_inner_outer(roots, n0, R).inner;
  label_radial_indices(inner, n0, R);
  for (const auto& r : inner)
    if (r.j && *r.j == j) return r;
  fail(Errc::NoConvergence, "no inner resonance with the requested radial index in the search box");
}

}  // namespace wgm
