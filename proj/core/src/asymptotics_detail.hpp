#pragma once

#include <vector>

#include "wgm/asymptotics.hpp"

namespace wgm::detail {

// Gauss-Hermite coefficient vectors in the variable x, acted on through the
// ladder relations.
using GHVec = std::vector<double>;

GHVec gh_times_x(const GHVec& v);
GHVec gh_derivative(const GHVec& v);
GHVec gh_add(const GHVec& a, const GHVec& b);
GHVec gh_scale(const GHVec& a, double c);
GHVec gh_times_poly(const Poly& a, const GHVec& v);
// Operator written in sigma acting on a function of x = s * sigma.
GHVec gh_apply(const OperatorTaylorTerm& op, double s, const GHVec& v);
double gh_value_at_zero(const GHVec& v);
double gh_derivative_at_zero(const GHVec& v);
double gh_eval(const GHVec& v, double x);

// Integral of Psi_k Psi_l over x < 0, from values and slopes at 0.
double halfline_gram(int k, int l);

ExpPoly exp_apply(const OperatorTaylorTerm& op, const ExpPoly& psi);
double exp_eval(const ExpPoly& psi, double rho);
// Solves -n0^2 P'' + 2 n0^2 w P' = E with P(0) = 0.
Poly exp_solve(const Poly& E, double n02, double w);
void trim(Poly& p);

void check_order(int order);

}  // namespace wgm::detail
