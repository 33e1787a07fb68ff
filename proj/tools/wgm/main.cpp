#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "wgm/errors.hpp"
#include "wgm/io.hpp"

namespace fs = std::filesystem;
using namespace wgm;
using namespace wgm::cli;

namespace {

constexpr const char* kColumns = R"(Output columns
  sweep.csv      m,j,p,k_asym,re_k_modal,im_k_modal,re_k_fd,im_k_fd,abs_err_re,
                 log10_im_fd,q_factor,wkb_log10_im,error
  potential.csv  r,W
  mode_*.csv     r,re_w,im_w
  convergence.csv      p,j,terms,m,rel_err
  convergence_fit.csv  p,j,terms,exponent,expected_exponent
Exit codes: 0 ok, 2 config error, 3 solver non-convergence, 4 precondition violation.
Log level from WGM_LOG (trace, debug, info, warn, error, off).)";

struct Options {
  std::string config;
  int jobs = 1;
  bool keep_going = false;
  std::string out;
};

std::string out_dir(const Options& o, const RunConfig& c) {
  const std::string dir = o.out.empty() ? c.out_dir : o.out;
  fs::create_directories(dir);
  return dir;
}

int cmd_classify(const Options& o) {
  const auto c = load_config(o.config);
  const auto dir = out_dir(o, c);
  const auto report = classify_report(c);
  std::cout << "case " << report["case"].get<std::string>();
  if (report.contains("kappa_breve"))
    std::cout << ", kappa=" << format_double(report["kappa_breve"]) << ", mu=" << format_double(report["mu_breve"]);
  else
    std::cout << ", R0=" << format_double(report["R0"]) << ", mu0=" << format_double(report["mu0_breve"])
              << ", eta3=" << format_double(report["eta3"]) << ", eta4=" << format_double(report["eta4"]);
  std::cout << ", W0=" << format_double(report["W0"]) << '\n';
  if (report["multiwell_warning"].get<bool>()) spdlog::warn("more than one interior minimum of W");
  std::ofstream(dir + "/classification.json") << report.dump(2) << '\n';
  std::ofstream pot(dir + "/potential.csv");
  write_potential_csv(pot, *c.profile);
  return 0;
}

int cmd_sweep(const Options& o) {
  const auto c = load_config(o.config);
  const auto dir = out_dir(o, c);
  const auto s = run_sweep(c, o.jobs);
  std::ofstream csv(dir + "/sweep.csv");
  write_sweep_csv(csv, s);
  std::ofstream(dir + "/sweep.json") << sweep_to_json(s).dump(2) << '\n';
  spdlog::info("{} rows written to {}", s.rows.size(), dir);
  if (s.worst && !o.keep_going) return exit_code(*s.worst);
  return 0;
}

int cmd_modes(const Options& o) {
  const auto c = load_config(o.config);
  const auto dir = out_dir(o, c);
  for (const auto& f : run_modes(c, o.jobs, dir))
    std::cout << f.name << " radial_index=" << f.radial_index << '\n';
  return 0;
}

int cmd_convergence(const Options& o) {
  const auto c = load_config(o.config);
  const auto dir = out_dir(o, c);
  const auto r = run_convergence(c, o.jobs);
  std::ofstream table(dir + "/convergence.csv");
  table << "p,j,terms,m,rel_err\n";
  for (const auto& e : r.entries)
    table << e.p << ',' << e.j << ',' << e.terms << ',' << e.m << ',' << format_double(e.rel_err) << '\n';
  std::ofstream fit(dir + "/convergence_fit.csv");
  fit << "p,j,terms,exponent,expected_exponent\n";
  for (const auto& f : r.fits) {
    fit << f.p << ',' << f.j << ',' << f.terms << ',' << format_double(f.exponent) << ',' << format_double(f.expected_exponent) << '\n';
    std::cout << "p=" << f.p << " j=" << f.j << " terms=" << f.terms << " exponent=" << f.exponent
              << " expected=" << f.expected_exponent << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("wgm"));
  spdlog::set_level(spdlog::level::info);
  if (const char* level = std::getenv("WGM_LOG")) spdlog::set_level(spdlog::level::from_str(level));

  CLI::App app{"Whispering-gallery resonances of radially varying disk cavities"};
  app.footer(kColumns);
  app.require_subcommand(1);
  Options o;
  const auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", o.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--keep-going", o.keep_going, "exit 0 even when some rows fail");
    sub->add_option("--out", o.out, "output directory (overrides output.dir)");
    return sub;
  };
  auto* classify = add("classify", "well type, curvature data and W(r) samples");
  auto* sweep = add("sweep", "resonance table over (p, j, m) for the selected engines");
  auto* modes = add("modes", "radial mode profiles from one engine");
  auto* convergence = add("convergence", "asymptotic error against an oracle, with fitted decay exponents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*sweep) return cmd_sweep(o);
    if (*modes) return cmd_modes(o);
    if (*convergence) return cmd_convergence(o);
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 4;
  }
  return 0;
}
