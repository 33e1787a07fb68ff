#include <algorithm>
#include <cmath>

#include "asymptotics_detail.hpp"
#include "wgm/errors.hpp"

namespace wgm {

using detail::GHVec;

CaseCResult case_c_recurrence(const Poly& ntilde, int p, int j, int order) {
  detail::check_order(order);
  if (ntilde.size() < 3) fail(Errc::InsufficientDerivatives, "need n through second order at R0");
  const double n0 = ntilde[0];
  const double mu0 = 2.0 - 2.0 * ntilde[2] / n0;
  if (!(mu0 > 0.0)) fail(Errc::NonPositiveHessian, "case C needs a positive hessian");
  const int q_max = std::max(order - 1, 0);
  const OperatorTaylorSet ops = taylor_operators(ntilde, p, Case::C, q_max);
  const double s = std::pow(mu0, 0.25);
  const double smu = std::sqrt(mu0);

  CaseCResult res;
  res.lambda = {Rational{1, 2}, std::vector<double>(static_cast<std::size_t>(order), 0.0)};
  if (order == 0) return res;
  auto& lam = res.lambda.coeffs;
  lam[0] = (2.0 * j + 1.0) * smu;

  std::vector<GHVec> phi;
  GHVec phi0(static_cast<std::size_t>(j) + 1, 0.0);
  phi0[j] = 1.0;
  phi.push_back(phi0);
  std::vector<GHVec> rhs{GHVec{}};

  for (int q = 1; q < order; ++q) {
    GHVec S = detail::gh_scale(detail::gh_apply(ops.minus[q], s, phi0), -1.0);
    for (int l = 1; l < q; ++l) {
      S = detail::gh_add(S, detail::gh_scale(phi[q - l], lam[l]));
      S = detail::gh_add(S, detail::gh_scale(detail::gh_apply(ops.minus[l], s, phi[q - l]), -1.0));
    }
    S.resize(std::max(S.size(), phi0.size()), 0.0);
    lam[q] = -S[j];
    GHVec b(S.size(), 0.0);
    for (std::size_t i = 0; i < S.size(); ++i)
      if (static_cast<int>(i) != j) b[i] = S[i] / (2.0 * smu * (static_cast<double>(i) - j));
    while (b.size() > static_cast<std::size_t>(j) + 1 && b.back() == 0.0) b.pop_back();
    phi.push_back(b);
    rhs.push_back(S);
  }

  // (A_0 - lambda_0) phi_q = lambda_q phi_0 + S_q, checked coefficientwise.
  for (int q = 1; q < order; ++q) {
    GHVec lhs = detail::gh_apply(ops.minus[0], s, phi[q]);
    lhs = detail::gh_add(lhs, detail::gh_scale(phi[q], -lam[0]));
    GHVec r = detail::gh_add(detail::gh_scale(phi0, lam[q]), rhs[q]);
    const GHVec diff = detail::gh_add(lhs, detail::gh_scale(r, -1.0));
    const double scale = 1.0 + poly::max_abs(r);
    res.max_residual = std::max(res.max_residual, poly::max_abs(diff) / scale);
    // Orthogonality: the j-th coefficient of S_q + lambda_q phi_0 vanishes.
    const double dj = (rhs[q].size() > static_cast<std::size_t>(j) ? rhs[q][j] : 0.0) + lam[q];
    res.max_orthogonality_defect = std::max(res.max_orthogonality_defect, std::abs(dj) / scale);
  }
  for (auto& v : phi) res.phi.push_back({v, s});
  return res;
}

ResonanceExpansion case_c_explicit(double R0, double n_R0, double mu0, double eta3, double eta4, int p, int j) {
  if (!(mu0 > 0.0)) fail(Errc::NonPositiveHessian, "case C needs a positive hessian");
  const double pp = p;
  const double jj = 2.0 * j + 1.0;
  const double k4 = (13.0 - 16.0 * pp + (8.0 * pp * pp - 16.0 * pp + 5.0) / mu0 - (2.0 * eta3 - 3.0 * eta4) / (3.0 * mu0 * mu0) -
                     7.0 * eta3 * eta3 / (9.0 * mu0 * mu0 * mu0) +
                     jj * jj *
                         (5.0 - 35.0 / mu0 + (10.0 * eta3 + eta4) / (mu0 * mu0) - 5.0 * eta3 * eta3 / (3.0 * mu0 * mu0 * mu0))) /
                    64.0;
  ResonanceExpansion e;
  e.p = p;
  e.j = j;
  e.wcase = Case::C;
  e.anchor = 1.0 / (R0 * n_R0);
  e.series = {Rational{1, 2}, {1.0, 0.0, (j + 0.5) * std::sqrt(mu0), 0.0, k4 * mu0}};
  return e;
}

}  // namespace wgm
