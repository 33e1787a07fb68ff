#pragma once

#include <vector>

#include "wgm/cavity.hpp"
#include "wgm/modal.hpp"

namespace wgm {

// Uniform nodes r_i = i h, i = 0..N, with R and pml_start on nodes. Beyond
// pml_start the coordinate is rotated: r~ = pml_start + e^{i theta}(r - pml_start).
struct RadialGrid {
  double R = 1.0;
  double r_max = 3.0;
  int N = 4000;
  double h = 0.0;
  double pml_start = 2.0;
  double theta = 0.5;
  int index_R = 0;
  int index_pml = 0;

  double node(int i) const { return i * h; }
};

// r_max and pml_start default to 3R and 2R. R is put on a node by taking
// h = R / round(N R / r_max) and then r_max = N h.
RadialGrid make_grid(double R, int N = 4000, double r_max = 0.0, double pml_start = 0.0, double theta = 0.5);

// A w = k^2 B w on the interior nodes 1..N-1; A is complex symmetric
// tridiagonal, B diagonal.
struct DiscreteEVP {
  RadialGrid grid;
  int p = 1;
  int m = 1;
  std::vector<cplx> diag;
  std::vector<cplx> off;  // off[i] couples unknowns i and i+1
  std::vector<cplx> B;
};

DiscreteEVP assemble(const IndexProfile& profile, int p, int m, const RadialGrid& grid);

struct Eigenpair {
  cplx k2;
  cplx k;  // principal root, Re k > 0
  std::vector<cplx> w;  // interior nodes, w^T B w = 1
  int iterations = 0;
};

// The `count` eigenvalues nearest `shift` (a k^2 value) by shift-invert
// inverse iteration with up to 3 Rayleigh-quotient shift updates.
std::vector<Eigenpair> solve_near(const DiscreteEVP& evp, cplx shift, int count = 1);

struct FdOptions {
  int N = 4000;          // coarsest level; then 2N and 4N
  double r_max = 0.0;    // 0 means 3R
  double pml_start = 0.0;  // 0 means 2R
  double theta = 0.5;
};

struct FdResult {
  Resonance resonance;            // extrapolated, provenance fd
  std::vector<cplx> level_k;      // k at N, 2N, 4N
  double consistency = 0.0;       // |extrapolation from (N,2N) - from (2N,4N)| / |k|
  bool imag_resolved = true;      // false when |Im k| < 1e-13 Re k
  Eigenpair finest;
  RadialGrid finest_grid;
};

FdResult refine_extrapolated(const IndexProfile& profile, int p, int m, cplx seed_k, const FdOptions& options = {});

struct FdProfile {
  std::vector<double> r;
  std::vector<double> re_w;
  std::vector<double> im_w;
  int radial_index = 0;  // sign changes of Re w on (0, R)
};

// Samples on the physical region r <= pml_start.
FdProfile fd_mode_profile(const Eigenpair& pair, const RadialGrid& grid);

}  // namespace wgm
