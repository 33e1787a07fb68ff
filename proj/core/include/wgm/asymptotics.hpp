#pragma once

#include <vector>

#include "wgm/cavity.hpp"
#include "wgm/polynomial.hpp"
#include "wgm/series.hpp"

namespace wgm {

// A2(x) d^2 + A1(x) d + A0(x) in the scaled variable (sigma, rho or xi).
struct OperatorTaylorTerm {
  Poly A2;
  Poly A1;
  Poly A0;
};

struct OperatorTaylorSet {
  std::vector<OperatorTaylorTerm> minus;  // interior side (whole line in case C)
  std::vector<OperatorTaylorTerm> plus;   // exterior side; empty in case C
};

// ntilde holds the Taylor coefficients of n~(xi) = n(r_*(1 + xi)), i.e.
// ntilde[q] = r_*^q n^{(q)}(r_*) / q!.
OperatorTaylorSet taylor_operators(const Poly& ntilde, int p, Case c, int q_max);

// phi(sigma) = P(sigma) A(a_j + c sigma) + Q(sigma) A'(a_j + c sigma), c = (2 kappa)^{1/3}
struct AiryPolyPair {
  Poly P;
  Poly Q;
};

// psi(rho) = P(rho) exp(-rate rho)
struct ExpPoly {
  Poly P;
  double rate = 0.0;
};

struct CaseAMode {
  AiryPolyPair phi;
  ExpPoly psi;
};

struct CaseAResult {
  PowerSeries lambda;
  std::vector<CaseAMode> modes;
  double aj = 0.0;
  double aprime = 0.0;
  double c = 0.0;
  // Largest relative residual of the interior/exterior ODEs at sampled points.
  double max_residual = 0.0;
  // Largest mismatch in the two matching conditions.
  double max_matching_error = 0.0;
};

inline constexpr int kMaxRecurrenceOrder = 12;

CaseAResult case_a_recurrence(const Poly& ntilde, int p, int j, int order);
ResonanceExpansion case_a_explicit(double n0, double kappa_breve, double mu_breve, int p, int j);
ResonanceExpansion constant_index_expansion(double n0, double R, int p, int j);

// Case B closed form through order 3; r3n3 = R^3 n'''(R) / n(R).
ResonanceExpansion case_b_expansion(double n0, double R, double mu_breve, double r3n3, int p, int j);

// Finite Gauss-Hermite coefficient list in x = scale * sigma.
struct GHExpansion {
  std::vector<double> coeffs;
  double scale = 1.0;
};

struct CaseBResult {
  PowerSeries lambda;
  std::vector<GHExpansion> phi;  // restricted to sigma < 0
  std::vector<ExpPoly> psi;
  double tail_bound = 0.0;
};

// Experimental: truncates the half-line expansion at n_gh odd functions.
// Only lambda_0 and lambda_1 are exact.
CaseBResult case_b_recurrence(const Poly& ntilde, int p, int j, int order, int n_gh = 64);

struct CaseCResult {
  PowerSeries lambda;
  std::vector<GHExpansion> phi;
  double max_residual = 0.0;
  double max_orthogonality_defect = 0.0;
};

CaseCResult case_c_recurrence(const Poly& ntilde, int p, int j, int order);
ResonanceExpansion case_c_explicit(double R0, double n_R0, double mu0, double eta3, double eta4, int p, int j);

// Default engines for a classified profile.
ResonanceExpansion expansion_for(const WellClassification& wc, int p, int j, int order = 0);

struct ModeSample {
  std::vector<double> r;
  std::vector<double> w;
};

ModeSample quasimode_profile(const WellClassification& wc, int m, int p, int j, const std::vector<double>& grid);

struct LatticeGaps {
  double gap_m;
  double gap_j;
  double gap_m_leading;
  double gap_j_leading;
};

LatticeGaps lattice_gaps(const ResonanceExpansion& ej, const ResonanceExpansion& ej1, int m);

// exp(-2 S0 m), an order-of-magnitude heuristic for |Im k|.
double wkb_imag_estimate(double S0, int m);

}  // namespace wgm
