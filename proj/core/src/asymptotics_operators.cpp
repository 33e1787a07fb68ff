#include <algorithm>
#include <cmath>
#include <string>

#include "asymptotics_detail.hpp"
#include "wgm/errors.hpp"
#include "wgm/specfun.hpp"

namespace wgm {

namespace {

Poly monomial(double c, int degree) {
  Poly out(static_cast<std::size_t>(degree) + 1, 0.0);
  out[degree] = c;
  return out;
}

void accumulate(Poly& target, const Poly& add) { target = poly::add(target, add); }

}  // namespace

OperatorTaylorSet taylor_operators(const Poly& ntilde, int p, Case c, int q_max) {
  if (q_max < 0) fail(Errc::InvalidParameters, "q_max must be non-negative");
  // Interior scaling: argument of n~ is t^s sigma; exterior: h = t^r.
  const int s = (c == Case::A) ? 2 : 1;
  const int r = (c == Case::A) ? 3 : 2;
  const int L = (q_max + 2) / s;
  if (ntilde.size() < static_cast<std::size_t>(L) + 1)
    fail(Errc::InsufficientDerivatives, "need Taylor data of n through order " + std::to_string(L));

  const std::size_t order = static_cast<std::size_t>(L) + 1;
  Poly nt(ntilde.begin(), ntilde.begin() + static_cast<std::ptrdiff_t>(order));
  const double n0 = nt[0];
  const double n02 = n0 * n0;
  const Poly inv_n2 = jet::reciprocal(jet::mul(nt, nt));
  Poly one_plus_xi = jet::variable(1.0, order);
  const Poly inv_1x = jet::reciprocal(one_plus_xi);
  const Poly c2 = poly::scale(inv_n2, n02);
  const Poly dn = jet::derivative(nt);
  const Poly inv_n3 = jet::mul(inv_n2, jet::reciprocal(nt));
  const Poly c1 = poly::scale(poly::add(jet::mul(inv_1x, inv_n2), poly::scale(jet::mul(dn, inv_n3), p - 1.0)), n02);
  Poly V = poly::scale(jet::mul(jet::mul(inv_1x, inv_1x), inv_n2), n02);
  V[0] -= 1.0;

  OperatorTaylorSet out;
  out.minus.resize(static_cast<std::size_t>(q_max) + 1);
  for (int l = 0; l <= L; ++l) {
    if (s * l <= q_max) accumulate(out.minus[s * l].A2, monomial(-c2[l], l));
    // c1 loses its top coefficient through the derivative of n~.
    if (s + s * l <= q_max && l + 1 < static_cast<int>(order)) accumulate(out.minus[s + s * l].A1, monomial(-c1[l], l));
    if (s * l - 2 >= 0 && s * l - 2 <= q_max) accumulate(out.minus[s * l - 2].A0, monomial(V[l], l));
  }
  if (c == Case::C) return out;

  out.plus.resize(static_cast<std::size_t>(q_max) + 1);
  out.plus[0].A2 = {-n02};
  out.plus[0].A0 = {n02 - 1.0};
  for (int l = 0; r * (l + 1) <= q_max; ++l) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    accumulate(out.plus[r * (l + 1)].A1, monomial(-n02 * sgn, l));
  }
  for (int l = 1; r * l <= q_max; ++l) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    accumulate(out.plus[r * l].A0, monomial(n02 * (l + 1.0) * sgn, l));
  }
  return out;
}

namespace detail {

void check_order(int order) {
  if (order < 0 || order > kMaxRecurrenceOrder)
    fail(Errc::OrderTooHigh, "recurrence order must lie in [0, " + std::to_string(kMaxRecurrenceOrder) + "]");
}

GHVec gh_times_x(const GHVec& v) {
  GHVec out(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out[i - 1] += std::sqrt(i / 2.0) * v[i];
    out[i + 1] += std::sqrt((i + 1) / 2.0) * v[i];
  }
  return out;
}

GHVec gh_derivative(const GHVec& v) {
  GHVec out(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out[i - 1] += std::sqrt(i / 2.0) * v[i];
    out[i + 1] -= std::sqrt((i + 1) / 2.0) * v[i];
  }
  return out;
}

GHVec gh_add(const GHVec& a, const GHVec& b) { return poly::add(a, b); }
GHVec gh_scale(const GHVec& a, double c) { return poly::scale(a, c); }

GHVec gh_times_poly(const Poly& a, const GHVec& v) {
  GHVec out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    out = gh_times_x(out);
    out = gh_add(out, gh_scale(v, *it));
  }
  return out;
}

GHVec gh_apply(const OperatorTaylorTerm& op, double s, const GHVec& v) {
  // a(sigma) = a(x/s); d/dsigma = s d/dx
  auto in_x = [s](const Poly& a) {
    Poly out = a;
    double f = 1.0;
    for (auto& c : out) {
      c *= f;
      f /= s;
    }
    return out;
  };
  const GHVec dv = gh_derivative(v);
  const GHVec ddv = gh_derivative(dv);
  GHVec out = gh_times_poly(in_x(op.A0), v);
  out = gh_add(out, gh_scale(gh_times_poly(in_x(op.A1), dv), s));
  out = gh_add(out, gh_scale(gh_times_poly(in_x(op.A2), ddv), s * s));
  return out;
}

double gh_eval(const GHVec& v, double x) {
  if (v.empty()) return 0.0;
  const auto psi = gauss_hermite_all(static_cast<int>(v.size()) - 1, x);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * psi[i];
  return s;
}

double gh_value_at_zero(const GHVec& v) { return gh_eval(v, 0.0); }

double gh_derivative_at_zero(const GHVec& v) { return gh_eval(gh_derivative(v), 0.0); }

ExpPoly exp_apply(const OperatorTaylorTerm& op, const ExpPoly& psi) {
  auto d = [&](const Poly& P) { return poly::sub(poly::derivative(P), poly::scale(P, psi.rate)); };
  const Poly d1 = d(psi.P);
  const Poly d2 = d(d1);
  Poly out = poly::mul(op.A0, psi.P);
  out = poly::add(out, poly::mul(op.A1, d1));
  out = poly::add(out, poly::mul(op.A2, d2));
  return {out, psi.rate};
}

double exp_eval(const ExpPoly& psi, double rho) { return poly::eval(psi.P, rho) * std::exp(-psi.rate * rho); }

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0.0) p.pop_back();
}

Poly exp_solve(const Poly& E, double n02, double w) {
  const int d = static_cast<int>(E.size()) - 1;
  Poly p(static_cast<std::size_t>(std::max(d, 0)) + 3, 0.0);
  for (int k = d; k >= 0; --k) p[k + 1] = (E[k] + n02 * (k + 2.0) * (k + 1.0) * p[k + 2]) / (2.0 * n02 * w * (k + 1.0));
  trim(p);
  return p;
}

}  // namespace detail

double wkb_imag_estimate(double S0, int m) { return std::exp(-2.0 * S0 * m); }

}  // namespace wgm
