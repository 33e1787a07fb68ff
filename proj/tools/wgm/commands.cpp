#include "commands.hpp"

#include <spdlog/spdlog.h>

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <thread>

#include "wgm/asymptotics.hpp"
#include "wgm/errors.hpp"
#include "wgm/fdpml.hpp"
#include "wgm/io.hpp"
#include "wgm/modal.hpp"

namespace wgm::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config: return 2;
    case ErrorKind::nonconvergence: return 3;
    case ErrorKind::precondition: return 4;
  }
  return 4;
}

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& task) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
}

int severity(ErrorKind k) {
  switch (k) {
    case ErrorKind::nonconvergence: return 1;
    case ErrorKind::precondition: return 2;
    case ErrorKind::config: return 3;
  }
  return 0;
}

struct Task {
  int p;
  int j;
  int m;
};

std::vector<Task> tasks(const RunConfig& c) {
  std::vector<Task> out;
  for (int p : c.polarizations)
    for (int j : c.j_values)
      for (int m : c.m_values) out.push_back({p, j, m});
  return out;
}

double constant_n0(const IndexProfile& profile) { return profile.parameters().at("n0"); }

FdOptions fd_options(const FdSettings& s) {
  FdOptions o;
  o.N = s.N;
  o.r_max = s.r_max;
  o.pml_start = s.pml_start;
  o.theta = s.theta;
  return o;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

SweepResult run_sweep(const RunConfig& c, int jobs) {
  const auto& profile = *c.profile;
  const auto wc = classify(profile);
  const double S0 = wkb_action(wc.n0).S0;
  const auto list = tasks(c);
  std::vector<ComparisonRow> rows(list.size());
  std::vector<std::optional<ErrorKind>> kinds(list.size());

  parallel_for(list.size(), jobs, [&](std::size_t i) {
    const auto [p, j, m] = list[i];
    ComparisonRow& row = rows[i];
    row.m = m;
    row.j = j;
    row.p = p;
    row.wkb_log10_im = -2.0 * S0 * m / std::numbers::ln10;
    try {
      std::optional<double> seed;
      if (c.has(Engine::asym) || c.has(Engine::fd)) {
        const auto e = expansion_for(wc, p, j, c.asym_order);
        seed = evaluate_expansion(e, m, e.series.order());
        if (c.has(Engine::asym)) row.k_asym = seed;
      }
      if (c.has(Engine::modal)) {
        const auto r = modal_resonance(p, constant_n0(profile), profile.radius(), m, j);
        row.k_modal = r.k;
        row.q_factor = r.q_factor;
      }
      if (c.has(Engine::fd)) {
        const auto r = refine_extrapolated(profile, p, m, {*seed, 0.0}, fd_options(c.fd));
        row.k_fd = r.resonance.k;
        row.log10_im_fd = std::log10(std::abs(r.resonance.k.imag()));
        if (!row.q_factor) row.q_factor = r.resonance.q_factor;
      }
      if (row.k_asym) {
        if (row.k_modal) row.abs_err_re = std::abs(*row.k_asym - row.k_modal->real());
        else if (row.k_fd) row.abs_err_re = std::abs(*row.k_asym - row.k_fd->real());
      }
      spdlog::debug("sweep p={} j={} m={} done", p, j, m);
    } catch (const Error& e) {
      row.error = e.what();
      kinds[i] = e.kind();
      spdlog::warn("sweep p={} j={} m={}: {}", p, j, m, e.what());
    }
  });

  SweepResult out;
  out.rows = std::move(rows);
  for (const auto& k : kinds)
    if (k && (!out.worst || severity(*k) > severity(*out.worst))) out.worst = k;
  return out;
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << "m,j,p,k_asym,re_k_modal,im_k_modal,re_k_fd,im_k_fd,abs_err_re,log10_im_fd,q_factor,wkb_log10_im,error\n";
  for (const auto& r : s.rows) {
    os << r.m << ',' << r.j << ',' << r.p << ',' << opt(r.k_asym) << ',';
    os << (r.k_modal ? format_double(r.k_modal->real()) + ',' + format_double(r.k_modal->imag()) : std::string(",")) << ',';
    os << (r.k_fd ? format_double(r.k_fd->real()) + ',' + format_double(r.k_fd->imag()) : std::string(",")) << ',';
    os << opt(r.abs_err_re) << ',' << opt(r.log10_im_fd) << ',' << opt(r.q_factor) << ',' << format_double(r.wkb_log10_im) << ',';
    std::string err = r.error;
    for (auto& ch : err)
      if (ch == ',' || ch == '\n') ch = ';';
    os << err << '\n';
  }
}

namespace {

nlohmann::json cplx_json(const std::optional<cplx>& v) {
  if (!v) return nullptr;
  return nlohmann::json::array({v->real(), v->imag()});
}

std::optional<cplx> cplx_from(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  return cplx{v.at(0).get<double>(), v.at(1).get<double>()};
}

nlohmann::json real_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::optional<double> real_from(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

nlohmann::json sweep_to_json(const SweepResult& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"m", r.m},
                    {"j", r.j},
                    {"p", r.p},
                    {"k_asym", real_json(r.k_asym)},
                    {"k_modal", cplx_json(r.k_modal)},
                    {"k_fd", cplx_json(r.k_fd)},
                    {"abs_err_re", real_json(r.abs_err_re)},
                    {"log10_im_fd", real_json(r.log10_im_fd)},
                    {"q_factor", real_json(r.q_factor)},
                    {"wkb_log10_im", r.wkb_log10_im},
                    {"error", r.error}});
  return {{"rows", rows}};
}

SweepResult sweep_from_json(const nlohmann::json& doc) {
  SweepResult s;
  try {
    for (const auto& j : doc.at("rows")) {
      ComparisonRow r;
      r.m = j.at("m").get<int>();
      r.j = j.at("j").get<int>();
      r.p = j.at("p").get<int>();
      r.k_asym = real_from(j.at("k_asym"));
      r.k_modal = cplx_from(j.at("k_modal"));
      r.k_fd = cplx_from(j.at("k_fd"));
      r.abs_err_re = real_from(j.at("abs_err_re"));
      r.log10_im_fd = real_from(j.at("log10_im_fd"));
      r.q_factor = real_from(j.at("q_factor"));
      r.wkb_log10_im = j.at("wkb_log10_im").get<double>();
      r.error = j.at("error").get<std::string>();
      s.rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ConfigError, std::string("sweep results: ") + e.what());
  }
  return s;
}

nlohmann::json classify_report(const RunConfig& c) {
  const auto wc = classify(*c.profile);
  nlohmann::json out = {{"case", std::string(1, case_letter(wc.wcase))}, {"R", wc.R}, {"n0", wc.n0}, {"W0", wc.W0}};
  if (wc.wcase == Case::C) {
    out["R0"] = wc.R0;
    out["n_R0"] = wc.n_R0;
    out["mu0_breve"] = wc.mu0_breve;
    out["eta3"] = wc.eta3;
    out["eta4"] = wc.eta4;
  } else {
    out["kappa_breve"] = wc.kappa_breve;
    out["mu_breve"] = wc.mu_breve;
  }
  out["local_minima"] = wc.local_minima;
  out["multiwell_warning"] = wc.multiwell_warning;
  out["profile"] = profile_to_json(*c.profile);
  return out;
}

void write_potential_csv(std::ostream& os, const IndexProfile& profile, int samples) {
  os << "r,W\n";
  const double R = profile.radius();
  for (int i = 1; i <= samples; ++i) {
    const double r = 2.0 * R * i / samples;
    os << format_double(r) << ',' << format_double(effective_potential(profile, r)) << '\n';
  }
}

std::vector<ModeFile> run_modes(const RunConfig& c, int jobs, const std::string& dir) {
  const auto& profile = *c.profile;
  const auto wc = classify(profile);
  const double R = profile.radius();
  const double r_max = c.mode_r_max > 0.0 ? c.mode_r_max : 2.0 * R;
  std::vector<double> grid(c.mode_points);
  for (int i = 0; i < c.mode_points; ++i) grid[i] = r_max * (i + 1.0) / c.mode_points;

  const auto list = tasks(c);
  std::vector<ModeFile> files(list.size());
  std::vector<std::string> errors(list.size());
  std::vector<std::optional<Errc>> codes(list.size());
  parallel_for(list.size(), jobs, [&](std::size_t i) {
    const auto [p, j, m] = list[i];
    ModeFile f{std::string("mode_") + (p == 1 ? "TM" : "TE") + "_m" + std::to_string(m) + "_j" + std::to_string(j) + "_" +
                   to_string(c.mode_engine) + ".csv",
               m, j, p, 0};
    try {
      std::vector<double> r;
      std::vector<double> re;
      std::vector<double> im;
      std::vector<double> interior;
      switch (c.mode_engine) {
        case Engine::asym: {
          const auto s = quasimode_profile(wc, m, p, j, grid);
          r = s.r;
          re = s.w;
          im.assign(r.size(), 0.0);
          break;
        }
        case Engine::modal: {
          const auto res = modal_resonance(p, constant_n0(profile), R, m, j);
          const auto w = mode_field(p, constant_n0(profile), R, m, res.k, grid);
          double peak = 0.0;
          for (std::size_t q = 0; q < grid.size(); ++q)
            if (grid[q] <= R) peak = std::max(peak, std::abs(w[q]));
          r = grid;
          for (const auto& v : w) {
            re.push_back(v.real() / peak);
            im.push_back(v.imag() / peak);
          }
          break;
        }
        case Engine::fd: {
          const auto e = expansion_for(wc, p, j, c.asym_order);
          const auto res = refine_extrapolated(profile, p, m, {evaluate_expansion(e, m, e.series.order()), 0.0}, fd_options(c.fd));
          const auto s = fd_mode_profile(res.finest, res.finest_grid);
          r = s.r;
          re = s.re_w;
          im = s.im_w;
          break;
        }
      }
      for (std::size_t q = 0; q < r.size(); ++q)
        if (r[q] < R) interior.push_back(re[q]);
      f.radial_index = radial_index(interior);
      std::ofstream out(dir + "/" + f.name);
      out << "r,re_w,im_w\n";
      for (std::size_t q = 0; q < r.size(); ++q)
        out << format_double(r[q]) << ',' << format_double(re[q]) << ',' << format_double(im[q]) << '\n';
    } catch (const Error& e) {
      errors[i] = e.what();
      codes[i] = e.code();
    }
    files[i] = f;
  });
  for (std::size_t i = 0; i < list.size(); ++i)
    if (codes[i]) throw Error(*codes[i], files[i].name + ": " + errors[i]);
  return files;
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

ConvergenceResult run_convergence(const RunConfig& c, int jobs) {
  if (c.m_values.size() < 4) fail(Errc::InsufficientOracleData, "convergence needs at least 4 m values");
  const auto& profile = *c.profile;
  const auto wc = classify(profile);
  ConvergenceResult out;
  for (int p : c.polarizations) {
    for (int j : c.j_values) {
      const auto e = expansion_for(wc, p, j, c.asym_order);
      std::vector<double> oracle(c.m_values.size());
      parallel_for(c.m_values.size(), jobs, [&](std::size_t i) {
        const int m = c.m_values[i];
        if (c.oracle == Engine::modal) {
          oracle[i] = modal_resonance(p, constant_n0(profile), profile.radius(), m, j).k.real();
        } else {
          const double seed = evaluate_expansion(e, m, e.series.order());
          oracle[i] = refine_extrapolated(profile, p, m, {seed, 0.0}, fd_options(c.fd)).resonance.k.real();
        }
      });
      std::vector<int> orders = c.orders;
      if (orders.empty())
        for (std::size_t t = 1; t <= e.series.order(); ++t) orders.push_back(static_cast<int>(t));
      const double beta = e.series.beta.value();
      for (int terms : orders) {
        if (terms < 1 || static_cast<std::size_t>(terms) > e.series.order())
          fail(Errc::TermsExceedOrder, "convergence.orders: " + std::to_string(terms) + " exceeds the expansion order");
        std::vector<double> lx;
        std::vector<double> ly;
        for (std::size_t i = 0; i < c.m_values.size(); ++i) {
          const int m = c.m_values[i];
          const double rel = std::abs(evaluate_expansion(e, m, terms) - oracle[i]) / oracle[i];
          out.entries.push_back({p, j, terms, m, rel});
          lx.push_back(std::log(m));
          ly.push_back(std::log(std::max(rel, 1e-300)));
        }
        std::size_t first = terms;
        while (first < e.series.order() && std::abs(e.series[first]) < 1e-14) ++first;
        out.fits.push_back({p, j, terms, -fit_slope(lx, ly), beta * static_cast<double>(first)});
      }
    }
  }
  return out;
}

}  // namespace wgm::cli
