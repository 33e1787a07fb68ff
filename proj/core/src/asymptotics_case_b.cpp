#include <algorithm>
#include <cmath>
#include <numbers>

#include "asymptotics_detail.hpp"
#include "wgm/errors.hpp"
#include "wgm/specfun.hpp"

namespace wgm {

namespace {

using detail::GHVec;

// Psi_k(0) and Psi_k'(0) for k <= kmax.
struct GHAtZero {
  std::vector<double> v;
  std::vector<double> d;
};

GHAtZero gh_at_zero(int kmax) {
  GHAtZero out;
  out.v = gauss_hermite_all(kmax + 1, 0.0);
  out.d.resize(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k)
    out.d[k] = (k > 0 ? std::sqrt(k / 2.0) * out.v[k - 1] : 0.0) - std::sqrt((k + 1) / 2.0) * out.v[k + 1];
  out.v.resize(static_cast<std::size_t>(kmax) + 1);
  return out;
}

// Integral of Psi_k Psi_l over the negative half-line (Green's identity).
double halfline_gram(const GHAtZero& z, int k, int l) {
  if (k == l) return 0.5;
  if ((k + l) % 2 == 0) return 0.0;
  return (z.v[k] * z.d[l] - z.d[k] * z.v[l]) / (2.0 * (k - l));
}

}  // namespace

double detail::halfline_gram(int k, int l) { return wgm::halfline_gram(gh_at_zero(std::max(k, l)), k, l); }

ResonanceExpansion case_b_expansion(double n0, double R, double mu_breve, double r3n3, int p, int j) {
  if (!(mu_breve > 0.0)) fail(Errc::NonPositiveHessian, "case B needs a positive hessian");
  if (!(n0 > 1.0)) fail(Errc::IndexNotAboveUnity, "case B needs n0 > 1");
  const double dpsi = gauss_hermite(2 * j + 1, 0.0).derivative;
  const double k3 = dpsi * dpsi *
                    (-std::pow(n0, p) / std::sqrt(n0 * n0 - 1.0) +
                     (4.0 * j + 3.0) / (9.0 * std::pow(mu_breve, 1.5)) * (6.0 + r3n3 - 6.0 * mu_breve));
  const PowerSeries lambda{Rational{1, 2}, {(4.0 * j + 3.0) * std::sqrt(mu_breve), 2.0 * std::pow(mu_breve, 0.75) * k3}};
  return lambda_to_expansion(lambda, Case::B, 1.0 / (R * n0), p, j);
}

CaseBResult case_b_recurrence(const Poly& ntilde, int p, int j, int order, int n_gh) {
  detail::check_order(order);
  if (ntilde.size() < 3) fail(Errc::InsufficientDerivatives, "need n through second order at R");
  if (n_gh <= j + 1) fail(Errc::InvalidParameters, "n_gh must exceed j + 1");
  const double n0 = ntilde[0];
  if (!(n0 > 1.0)) fail(Errc::IndexNotAboveUnity, "case B needs n0 > 1");
  const double mu = 2.0 - 2.0 * ntilde[2] / n0;
  if (!(mu > 0.0)) fail(Errc::NonPositiveHessian, "case B needs a positive hessian");
  const int q_max = std::max(order - 1, 0);
  const OperatorTaylorSet ops = taylor_operators(ntilde, p, Case::B, q_max);
  const double s = std::pow(mu, 0.25);
  const double smu = std::sqrt(mu);
  const double n02 = n0 * n0;
  const double w = std::sqrt(1.0 - 1.0 / n02);
  const double flux = std::pow(n0, p - 1.0);
  const int kmax = 2 * n_gh + 3 * order + 8;
  const GHAtZero z0 = gh_at_zero(kmax);

  CaseBResult res;
  res.lambda = {Rational{1, 2}, std::vector<double>(static_cast<std::size_t>(order), 0.0)};
  if (order == 0) return res;
  auto& lam = res.lambda.coeffs;
  lam[0] = (4.0 * j + 3.0) * smu;

  std::vector<GHVec> phi;
  GHVec phi0(static_cast<std::size_t>(2 * j) + 2, 0.0);
  phi0[2 * j + 1] = 1.0;
  phi.push_back(phi0);
  std::vector<ExpPoly> psi{ExpPoly{{}, w}};

  for (int q = 1; q < order; ++q) {
    Poly E;
    for (int l = 2; l <= q; ++l) {
      const ExpPoly& prev = psi[q - l];
      E = poly::add(E, poly::sub(poly::scale(prev.P, lam[l - 2]), detail::exp_apply(ops.plus[l], prev).P));
    }
    Poly Pt = detail::exp_solve(E, n02, w);
    const double dP0 = Pt.size() > 1 ? Pt[1] : 0.0;
    if (Pt.empty()) Pt.push_back(0.0);
    const GHVec& last = phi[q - 1];
    double dphi = 0.0;
    for (std::size_t k = 0; k < last.size(); ++k) dphi += last[k] * z0.d[k];
    Pt[0] = (dP0 - flux * s * dphi) / w;
    psi.push_back({Pt, w});
    const double cq = Pt[0] / z0.v[0];

    GHVec S = detail::gh_scale(detail::gh_apply(ops.minus[q], s, phi0), -1.0);
    for (int l = 1; l < q; ++l) {
      S = detail::gh_add(S, detail::gh_scale(phi[q - l], lam[l]));
      S = detail::gh_add(S, detail::gh_scale(detail::gh_apply(ops.minus[l], s, phi[q - l]), -1.0));
    }
    if (S.empty()) S.push_back(0.0);
    S[0] += 2.0 * (2.0 * j + 1.0) * smu * cq;
    if (static_cast<int>(S.size()) - 1 > kmax) fail(Errc::OrderTooHigh, "Gauss-Hermite support exceeds table");

    auto project = [&](int i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < S.size(); ++k)
        if (S[k] != 0.0) acc += S[k] * halfline_gram(z0, static_cast<int>(k), 2 * i + 1);
      return acc;
    };
    lam[q] = -2.0 * project(j);
    GHVec next(static_cast<std::size_t>(2 * n_gh), 0.0);
    next[0] = cq;
    double tail = 0.0;
    for (int i = 0; i < n_gh; ++i) {
      if (i == j) continue;
      const double b = project(i) / (2.0 * smu * (i - j));
      next[2 * i + 1] = b;
      if (i >= n_gh - 4) tail = std::max(tail, std::abs(b));
    }
    res.tail_bound = std::max(res.tail_bound, tail);
    phi.push_back(next);
  }
  for (auto& v : phi) res.phi.push_back({v, s});
  res.psi = psi;
  return res;
}

}  // namespace wgm
