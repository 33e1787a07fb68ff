#pragma once

#include <optional>
#include <vector>

#include "wgm/specfun.hpp"

namespace wgm {

enum class Provenance { modal, fd, asymptotic };
const char* to_string(Provenance p);

struct Resonance {
  cplx k;
  int m = 0;
  std::optional<int> j;
  int p = 1;
  Provenance provenance = Provenance::modal;
  double q_factor = 0.0;  // Re k / |Im k|
  int multiplicity = 1;   // 2 for m != 0: +m and -m share the root
};

Resonance make_resonance(cplx k, int m, int p, Provenance provenance, std::optional<int> j = std::nullopt);

struct SearchBox {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = -1.2;
  double im_hi = -1e-14;
  int max_depth = 40;
  double newton_tol = 1e-12;
};

// Re k in [0.9, 1.6] m/(R n0), widened to reach the large-j estimate of j_max + 1.
SearchBox wgm_search_box(int p, double n0, double R, int m, int j_max = 0);

// n0^p J'_m(n0 R k) H'_m(R k) - J_m(n0 R k) H1'_m(R k)
cplx modal_function(int p, double n0, double R, int m, cplx k);
// Same, divided by |n0^p J' H| + |J H'|.
cplx modal_function_normalized(int p, double n0, double R, int m, cplx k);

struct ModalValue {
  cplx f;
  cplx df;  // dF/dk
};
ModalValue modal_function_with_derivative(int p, double n0, double R, int m, cplx k);

int count_zeros(int p, double n0, double R, int m, const SearchBox& box);

// Newton on F from k0; nullopt when the iteration stalls.
std::optional<cplx> refine_root(int p, double n0, double R, int m, cplx k0, double tol = 1e-12, int max_iter = 60);

// All roots in the box, sorted by Re k; j is left unset.
std::vector<Resonance> find_resonances(int p, double n0, double R, int m, const SearchBox& box);

std::vector<cplx> mode_field(int p, double n0, double R, int m, cplx k, const std::vector<double>& grid);

// Sign changes of the samples, ignoring values below 1e-8 of the maximum.
int radial_index(const std::vector<double>& re_w);

// Sets j from the sign changes of Re w on (0, R).
void label_radial_indices(std::vector<Resonance>& res, double n0, double R);

struct InnerOuterPartition {
  std::vector<Resonance> inner;
  std::vector<Resonance> outer;
};

// Inner when the disk holds at least a third of the L2 mass over the disk and
// the equal-area annulus outside it, growth exp(|Im k| r) removed.
InnerOuterPartition classify_inner_outer(const std::vector<Resonance>& res, double n0, double R);

cplx large_j_asymptote(int p, double n0, double R, int m, int j);

// Inner resonance with radial index j: searches a WGM box and labels the roots.
Resonance modal_resonance(int p, double n0, double R, int m, int j);

}  // namespace wgm
