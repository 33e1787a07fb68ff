#pragma once

#include <complex>
#include <vector>

namespace wgm {

using cplx = std::complex<double>;

struct BesselPair {
  cplx value;
  cplx derivative;
};

struct AirySample {
  double value;       // A(z) = Ai(-z)
  double derivative;  // dA/dz
};

struct AiryZero {
  double a;       // a_j, j-th positive zero of A
  double aprime;  // A'(a_j)
};

struct GaussHermiteSample {
  int order;
  double value;
  double derivative;
};

inline constexpr int kMaxBesselOrder = 200;

BesselPair bessel_j(int order, cplx z);
BesselPair bessel_y(int order, cplx z);
BesselPair hankel1(int order, cplx z);

// J and H1 of the same order at two arguments share nothing, but callers that
// need J and Y at one point avoid a second Miller pass.
struct BesselJY {
  BesselPair j;
  BesselPair y;
};
BesselJY bessel_jy(int order, cplx z);

AirySample airy_mirror(double z);
AiryZero airy_zero(int j);

GaussHermiteSample gauss_hermite(int ell, double z);
// Values of Psi_0..Psi_{ell_max} at z.
std::vector<double> gauss_hermite_all(int ell_max, double z);
double gh_halfline_norm(int ell_odd);

}  // namespace wgm
