#pragma once

#include <cstddef>
#include <vector>

namespace wgm {

// Dense coefficient list, Poly[k] multiplies x^k.
using Poly = std::vector<double>;

namespace poly {

double eval(const Poly& p, double x);
Poly derivative(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, double c);
// p(a + b x)
Poly affine(const Poly& p, double a, double b);
// Degree after dropping trailing entries with |c| <= tol; -1 for the zero polynomial.
int degree(const Poly& p, double tol = 0.0);
double max_abs(const Poly& p);

}  // namespace poly

// Truncated Taylor arithmetic: coefficient lists of length `order`, the value
// at x^k is f^{(k)}(x0)/k!.
namespace jet {

Poly constant(double c, std::size_t order);
Poly variable(double x0, std::size_t order);
Poly mul(const Poly& a, const Poly& b);
Poly reciprocal(const Poly& a);
Poly div(const Poly& a, const Poly& b);
Poly sqrt(const Poly& a);
Poly pow_real(const Poly& a, double e);
Poly derivative(const Poly& a);  // loses the last coefficient's information

}  // namespace jet

}  // namespace wgm
