#include <algorithm>
#include <cmath>

#include "asymptotics_detail.hpp"
#include "wgm/errors.hpp"
#include "wgm/specfun.hpp"

namespace wgm {

namespace {

using detail::exp_apply;

struct AiryContext {
  double aj;
  double c;
  Poly z() const { return {aj, c}; }
};

AiryPolyPair pair_add(const AiryPolyPair& a, const AiryPolyPair& b) {
  return {poly::add(a.P, b.P), poly::add(a.Q, b.Q)};
}

AiryPolyPair pair_scale(const AiryPolyPair& a, double s) { return {poly::scale(a.P, s), poly::scale(a.Q, s)}; }

AiryPolyPair pair_mul(const Poly& f, const AiryPolyPair& a) { return {poly::mul(f, a.P), poly::mul(f, a.Q)}; }

// d/dsigma using A'' = -z A.
AiryPolyPair pair_d(const AiryContext& ctx, const AiryPolyPair& a) {
  return {poly::sub(poly::derivative(a.P), poly::scale(poly::mul(ctx.z(), a.Q), ctx.c)),
          poly::add(poly::scale(a.P, ctx.c), poly::derivative(a.Q))};
}

AiryPolyPair pair_apply(const AiryContext& ctx, const OperatorTaylorTerm& op, const AiryPolyPair& a) {
  const AiryPolyPair d1 = pair_d(ctx, a);
  const AiryPolyPair d2 = pair_d(ctx, d1);
  return pair_add(pair_add(pair_mul(op.A0, a), pair_mul(op.A1, d1)), pair_mul(op.A2, d2));
}

double pair_eval(const AiryContext& ctx, const AiryPolyPair& a, double sigma) {
  const auto s = airy_mirror(ctx.aj + ctx.c * sigma);
  return poly::eval(a.P, sigma) * s.value + poly::eval(a.Q, sigma) * s.derivative;
}

// phi(0) and phi'(0) use A(a_j) = 0.
double pair_at_zero(const AiryContext& ctx, const AiryPolyPair& a, double aprime) {
  (void)ctx;
  return (a.Q.empty() ? 0.0 : a.Q[0]) * aprime;
}

double pair_derivative_at_zero(const AiryContext& ctx, const AiryPolyPair& a, double aprime) {
  const AiryPolyPair d = pair_d(ctx, a);
  return (d.Q.empty() ? 0.0 : d.Q[0]) * aprime;
}

using detail::trim;

// Solves (-d^2 - z) u = S in the z variable; z^l A and z^l A' bases, no A term.
AiryPolyPair airy_solve_z(const Poly& R, const Poly& T) {
  const int d = std::max(static_cast<int>(R.size()), static_cast<int>(T.size())) - 1;
  if (d < 0) return {};
  Poly p(static_cast<std::size_t>(d) + 3, 0.0);
  Poly q(static_cast<std::size_t>(d) + 3, 0.0);
  auto at = [](const Poly& v, int k) { return (k >= 0 && k < static_cast<int>(v.size())) ? v[k] : 0.0; };
  for (int k = d; k >= 0; --k) {
    p[k + 1] = -(at(T, k) + (k + 2.0) * (k + 1.0) * q[k + 2]) / (2.0 * (k + 1.0));
    q[k] = (at(R, k) + (k + 2.0) * (k + 1.0) * p[k + 2]) / (2.0 * k + 1.0);
  }
  trim(p);
  trim(q);
  return {p, q};
}

// Solves -phi'' - (2 kappa sigma + lambda0) phi = S with P(0) = 0.
AiryPolyPair airy_solve(const AiryContext& ctx, const AiryPolyPair& S) {
  const double c = ctx.c;
  const double c2 = c * c;
  // sigma = (z - a_j)/c
  const Poly Rz = poly::scale(poly::affine(S.P, -ctx.aj / c, 1.0 / c), 1.0 / c2);
  const Poly Tz = poly::scale(poly::affine(S.Q, -ctx.aj / c, 1.0 / c), 1.0 / c2);
  const AiryPolyPair uz = airy_solve_z(Rz, Tz);
  AiryPolyPair u{poly::affine(uz.P, ctx.aj, c), poly::affine(uz.Q, ctx.aj, c)};
  if (!u.P.empty()) u.P[0] = 0.0;  // drop the kernel direction A(z)
  return u;
}

}  // namespace

CaseAResult case_a_recurrence(const Poly& ntilde, int p, int j, int order) {
  detail::check_order(order);
  if (ntilde.size() < 2) fail(Errc::InsufficientDerivatives, "need n and n' at R");
  const double n0 = ntilde[0];
  if (!(n0 > 1.0)) fail(Errc::IndexNotAboveUnity, "case A needs n0 > 1");
  const double kappa = 1.0 + ntilde[1] / n0;
  if (!(kappa > 0.0)) fail(Errc::NonPositiveCurvature, "case A needs positive curvature");

  const int q_max = std::max(order - 1, 0);
  const OperatorTaylorSet ops = taylor_operators(ntilde, p, Case::A, q_max);
  const AiryZero zero = airy_zero(j);
  const AiryContext ctx{zero.a, std::cbrt(2.0 * kappa)};
  const double c2 = ctx.c * ctx.c;
  const double n02 = n0 * n0;
  const double w = std::sqrt(1.0 - 1.0 / n02);
  const double flux = std::pow(n0, p - 1.0);

  CaseAResult res;
  res.aj = zero.a;
  res.aprime = zero.aprime;
  res.c = ctx.c;
  res.lambda = {Rational{1, 3}, std::vector<double>(static_cast<std::size_t>(order), 0.0)};
  if (order == 0) return res;

  std::vector<double>& lam = res.lambda.coeffs;
  std::vector<AiryPolyPair> phi;
  std::vector<ExpPoly> psi;
  std::vector<AiryPolyPair> sphi;
  std::vector<ExpPoly> spsi;
  lam[0] = zero.a * c2;
  phi.push_back({{1.0}, {}});
  psi.push_back({{}, w});
  sphi.emplace_back();
  spsi.push_back({{}, w});

  for (int q = 1; q < order; ++q) {
    ExpPoly Spsi{{}, w};
    for (int l = 2; l <= q; ++l) {
      const ExpPoly& prev = psi[q - l];
      ExpPoly term = exp_apply(ops.plus[l], prev);
      Spsi.P = poly::add(Spsi.P, poly::sub(poly::scale(prev.P, lam[l - 2]), term.P));
    }
    Poly Pt = detail::exp_solve(Spsi.P, n02, w);
    const double target = flux * pair_derivative_at_zero(ctx, phi[q - 1], zero.aprime);
    const double dP0 = Pt.size() > 1 ? Pt[1] : 0.0;
    if (Pt.empty()) Pt.push_back(0.0);
    Pt[0] = (dP0 - target) / w;
    psi.push_back({Pt, w});

    AiryPolyPair Sphi = pair_scale(pair_apply(ctx, ops.minus[q], phi[0]), -1.0);
    for (int l = 1; l < q; ++l) {
      const AiryPolyPair& prev = phi[q - l];
      Sphi = pair_add(Sphi, pair_add(pair_scale(prev, lam[l]), pair_scale(pair_apply(ctx, ops.minus[l], prev), -1.0)));
    }
    AiryPolyPair ph = airy_solve(ctx, Sphi);
    const double psi0 = Pt[0];
    lam[q] = c2 / zero.aprime * (psi0 - pair_at_zero(ctx, ph, zero.aprime));
    if (ph.Q.empty()) ph.Q.push_back(0.0);
    ph.Q[0] += lam[q] / c2;
    trim(ph.P);
    trim(ph.Q);
    phi.push_back(ph);
    sphi.push_back(Sphi);
    spsi.push_back(Spsi);
  }

  // Residuals of both ODE lines at sampled points and of the matching conditions.
  for (int q = 1; q < order; ++q) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double sigma = -6.0 * i / 49.0;
      const AiryPolyPair lhs = pair_apply(ctx, ops.minus[0], phi[q]);
      const double a = pair_eval(ctx, lhs, sigma);
      const double b = lam[q] * pair_eval(ctx, phi[0], sigma) + pair_eval(ctx, sphi[q], sigma);
      // lambda_0 sits on the left-hand side
      const double l0 = lam[0] * pair_eval(ctx, phi[q], sigma);
      const double scale = std::abs(a) + std::abs(b) + std::abs(l0) + 1e-300;
      worst = std::max(worst, std::abs(a - l0 - b) / scale);
      const double rho = 6.0 * i / 49.0;
      const ExpPoly lp = exp_apply(ops.plus[0], psi[q]);
      const double pa = detail::exp_eval(lp, rho);
      const double pb = detail::exp_eval(spsi[q], rho);
      const double pscale = std::abs(pa) + std::abs(pb) + 1e-300;
      if (pscale > 1e-12) worst = std::max(worst, std::abs(pa - pb) / pscale);
    }
    res.max_residual = std::max(res.max_residual, worst);
    const double m1 = std::abs(pair_at_zero(ctx, phi[q], zero.aprime) - poly::eval(psi[q].P, 0.0));
    const Poly dpsi = poly::sub(poly::derivative(psi[q].P), poly::scale(psi[q].P, w));
    const double m2 = std::abs(poly::eval(dpsi, 0.0) - flux * pair_derivative_at_zero(ctx, phi[q - 1], zero.aprime));
    const double mscale = 1.0 + std::abs(poly::eval(psi[q].P, 0.0));
    res.max_matching_error = std::max({res.max_matching_error, m1 / mscale, m2 / mscale});
  }

  for (int q = 0; q < order; ++q) res.modes.push_back({phi[q], psi[q]});
  return res;
}

ResonanceExpansion case_a_explicit(double n0, double kappa_breve, double mu_breve, int p, int j) {
  if (!(kappa_breve > 0.0)) fail(Errc::NonPositiveCurvature, "case A needs positive curvature");
  if (!(n0 > 1.0)) fail(Errc::IndexNotAboveUnity, "case A needs n0 > 1");
  const double a = airy_zero(j).a;
  const double np = std::pow(n0, p);
  const double s = std::sqrt(n0 * n0 - 1.0);
  const double k = kappa_breve;
  const double k4 = a * a / 15.0 * (17.0 / 8.0 - 3.0 / k + mu_breve / (k * k));
  const double k5 = -a * np / (12.0 * s) *
                    ((3.0 * n0 * n0 - 2.0 * np * np) / (n0 * n0 - 1.0) + 2.0 - 6.0 / k + 2.0 * mu_breve / (k * k));
  const double c[6] = {1.0, 0.0, a / 2.0, -np / (2.0 * s), k4, k5};
  ResonanceExpansion e;
  e.p = p;
  e.j = j;
  e.wcase = Case::A;
  e.anchor = 1.0 / n0;  // R = 1 units; callers rescale by 1/R
  e.series = {Rational{1, 3}, std::vector<double>(6)};
  for (int l = 0; l < 6; ++l) e.series.coeffs[l] = c[l] * std::pow(2.0 * k, l / 3.0);
  return e;
}

ResonanceExpansion constant_index_expansion(double n0, double R, int p, int j) {
  if (!(n0 > 1.0)) fail(Errc::IndexNotAboveUnity, "constant index needs n0 > 1");
  const double a = airy_zero(j).a;
  const double a2 = a * a;
  const double a3 = a2 * a;
  const double u = n0 * n0 - 1.0;
  const double su = std::sqrt(u);
  const double n2 = n0 * n0;
  const double n4 = n2 * n2;
  const double n6 = n4 * n2;
  const double n8 = n4 * n4;
  double c[9] = {1.0, 0.0, a / 2.0, 0.0, 3.0 * a2 / 40.0, 0.0, 0.0, 0.0, 0.0};
  if (p == 1) {
    c[3] = -n0 / (2.0 * su);
    c[5] = -a * n0 * n2 / (12.0 * u * su);
    c[6] = (10.0 - a3) / 2800.0;
    c[7] = a2 * n2 * n0 * (n2 - 4.0) / (80.0 * u * u * su);
    c[8] = -a / 144.0 * (1.0 / 175.0 + 479.0 * a3 / 7000.0 + 2.0 * n6 / (u * u * u));
  } else {
    c[3] = -1.0 / (2.0 * n0 * su);
    c[5] = -a * (3.0 * n4 - 2.0) / (12.0 * n0 * n2 * u * su);
    c[6] = (1.0 / 35.0 - a3 / 350.0 + 1.0 / (n4 * u)) / 8.0;
    c[7] = -a2 * (3.0 * n8 + 12.0 * n6 - 12.0 * n4 - 8.0 * n2 + 8.0) / (80.0 * n4 * n0 * u * u * su);
    c[8] = -a / 144.0 *
           (1.0 / 175.0 + 479.0 * a3 / 7000.0 + (18.0 * n8 - 45.0 * n6 + 12.0 * n4 + 45.0 * n2 - 28.0) / (n6 * u * u * u));
  }
  ResonanceExpansion e;
  e.p = p;
  e.j = j;
  e.wcase = Case::A;
  e.anchor = 1.0 / (R * n0);
  e.series = {Rational{1, 3}, std::vector<double>(9)};
  for (int l = 0; l < 9; ++l) e.series.coeffs[l] = c[l] * std::pow(2.0, l / 3.0);
  return e;
}

}  // namespace wgm
