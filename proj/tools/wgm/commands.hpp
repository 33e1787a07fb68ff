#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "wgm/errors.hpp"
#include "wgm/specfun.hpp"

namespace wgm::cli {

struct ComparisonRow {
  int m = 0;
  int j = 0;
  int p = 1;
  std::optional<double> k_asym;
  std::optional<cplx> k_modal;
  std::optional<cplx> k_fd;
  std::optional<double> abs_err_re;   // |k_asym - Re k_oracle|, oracle = modal, else fd
  std::optional<double> log10_im_fd;
  std::optional<double> q_factor;     // from modal, else fd
  double wkb_log10_im = 0.0;
  std::string error;
};

struct SweepResult {
  std::vector<ComparisonRow> rows;  // sorted by p, j, m
  std::optional<ErrorKind> worst;   // most severe failure, if any
};

SweepResult run_sweep(const RunConfig& config, int jobs);
void write_sweep_csv(std::ostream& os, const SweepResult& s);
nlohmann::json sweep_to_json(const SweepResult& s);
SweepResult sweep_from_json(const nlohmann::json& doc);

nlohmann::json classify_report(const RunConfig& config);
void write_potential_csv(std::ostream& os, const IndexProfile& profile, int samples = 1000);

struct ModeFile {
  std::string name;
  int m;
  int j;
  int p;
  int radial_index;
};
std::vector<ModeFile> run_modes(const RunConfig& config, int jobs, const std::string& dir);

struct ConvergenceEntry {
  int p;
  int j;
  int terms;
  int m;
  double rel_err;
};
struct ConvergenceFit {
  int p;
  int j;
  int terms;
  double exponent;           // -slope of log rel_err against log m
  double expected_exponent;  // beta times the first neglected nonzero index
};
struct ConvergenceResult {
  std::vector<ConvergenceEntry> entries;
  std::vector<ConvergenceFit> fits;
};
ConvergenceResult run_convergence(const RunConfig& config, int jobs);

// Exit-code contract: 0 ok, 2 config, 3 non-convergence, 4 precondition.
int exit_code(ErrorKind kind);

}  // namespace wgm::cli
