#include "wgm/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wgm {
namespace poly {

double eval(const Poly& p, double x) {
  double v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, -1.0)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  return out;
}

Poly scale(const Poly& a, double c) {
  Poly out = a;
  for (auto& v : out) v *= c;
  return out;
}

Poly affine(const Poly& p, double a, double b) {
  // Horner in polynomial arithmetic.
  Poly out;
  const Poly lin{a, b};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    out = mul(out, lin);
    if (out.empty()) out.push_back(0.0);
    out[0] += *it;
  }
  return out;
}

int degree(const Poly& p, double tol) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (std::abs(p[k]) > tol) return k;
  return -1;
}

double max_abs(const Poly& p) {
  double m = 0.0;
  for (double v : p) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace poly

namespace jet {

Poly constant(double c, std::size_t order) {
  Poly out(order, 0.0);
  if (order > 0) out[0] = c;
  return out;
}

Poly variable(double x0, std::size_t order) {
  Poly out(order, 0.0);
  if (order > 0) out[0] = x0;
  if (order > 1) out[1] = 1.0;
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Poly out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; i + k < n; ++k) out[i + k] += a[i] * b[k];
  return out;
}

Poly reciprocal(const Poly& a) {
  if (a.empty() || a[0] == 0.0) throw std::domain_error("jet reciprocal of zero");
  Poly out(a.size(), 0.0);
  out[0] = 1.0 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    double s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * out[n - k];
    out[n] = -s / a[0];
  }
  return out;
}

Poly div(const Poly& a, const Poly& b) { return mul(a, reciprocal(b)); }

Poly pow_real(const Poly& a, double e) {
  // (a^e)' a = e a' a^e, solved term by term.
  if (a.empty() || !(a[0] > 0.0)) throw std::domain_error("jet power of non-positive value");
  const std::size_t n = a.size();
  Poly out(n, 0.0);
  out[0] = std::pow(a[0], e);
  for (std::size_t k = 1; k < n; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += (e * static_cast<double>(i) - static_cast<double>(k - i)) * a[i] * out[k - i];
    out[k] = s / (static_cast<double>(k) * a[0]);
  }
  return out;
}

Poly sqrt(const Poly& a) { return pow_real(a, 0.5); }

Poly derivative(const Poly& a) {
  Poly out(a.size(), 0.0);
  for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = static_cast<double>(k) * a[k];
  return out;
}

}  // namespace jet
}  // namespace wgm
