#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "wgm/errors.hpp"

namespace wgm::cli {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::asym: return "asym";
    case Engine::modal: return "modal";
    case Engine::fd: return "fd";
  }
  return "?";
}

bool RunConfig::has(Engine e) const { return std::find(engines.begin(), engines.end(), e) != engines.end(); }

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) { fail(Errc::ConfigError, field + ": " + what); }

Engine engine_from(const nlohmann::json& v, const std::string& field) {
  if (!v.is_string()) bad(field, "expected one of asym, modal, fd");
  const auto s = v.get<std::string>();
  if (s == "asym") return Engine::asym;
  if (s == "modal") return Engine::modal;
  if (s == "fd") return Engine::fd;
  bad(field, "unknown engine '" + s + "'");
}

int integer(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer()) bad(field, "expected an integer");
  return v.get<int>();
}

double number(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number()) bad(field, "expected a number");
  return v.get<double>();
}

std::vector<int> int_list(const nlohmann::json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

// [5, 10] or {"from": 5, "to": 60, "step": 5}
std::vector<int> m_list(const nlohmann::json& v) {
  std::vector<int> out;
  if (v.is_array()) {
    out = int_list(v, "m");
  } else if (v.is_object()) {
    const int from = integer(v.value("from", nlohmann::json()), "m.from");
    const int to = integer(v.value("to", nlohmann::json()), "m.to");
    const int step = v.contains("step") ? integer(v.at("step"), "m.step") : 1;
    if (step < 1) bad("m.step", "must be positive");
    for (int m = from; m <= to; m += step) out.push_back(m);
  } else {
    bad("m", "expected an array or {from, to, step}");
  }
  for (int m : out)
    if (m < 1 || m > 200) bad("m", "values must lie in [1, 200]");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int polarization(const nlohmann::json& v, const std::string& field) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "TM") return 1;
    if (s == "TE") return -1;
    bad(field, "expected TM, TE, 1 or -1");
  }
  const int p = integer(v, field);
  if (p != 1 && p != -1) bad(field, "expected TM, TE, 1 or -1");
  return p;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) bad("config", "expected a JSON object");
  static const std::vector<std::string> known = {"profile", "polarizations", "m", "j", "engines", "asym", "fd", "modes", "convergence", "output"};
  for (const auto& [key, _] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) bad(key, "unknown field");

  RunConfig c;
  if (!doc.contains("profile")) bad("profile", "missing");
  c.profile_doc = doc.at("profile");
  c.profile = profile_from_json(c.profile_doc);

  if (doc.contains("polarizations")) {
    const auto& v = doc.at("polarizations");
    if (!v.is_array() || v.empty()) bad("polarizations", "expected a nonempty array");
    c.polarizations.clear();
    for (std::size_t i = 0; i < v.size(); ++i) c.polarizations.push_back(polarization(v[i], "polarizations[" + std::to_string(i) + "]"));
    std::sort(c.polarizations.begin(), c.polarizations.end(), std::greater<>());
    c.polarizations.erase(std::unique(c.polarizations.begin(), c.polarizations.end()), c.polarizations.end());
  }
  if (doc.contains("m")) c.m_values = m_list(doc.at("m"));
  if (doc.contains("j")) {
    c.j_values = int_list(doc.at("j"), "j");
    for (int j : c.j_values)
      if (j < 0 || j > 50) bad("j", "values must lie in [0, 50]");
    std::sort(c.j_values.begin(), c.j_values.end());
    c.j_values.erase(std::unique(c.j_values.begin(), c.j_values.end()), c.j_values.end());
  }
  if (doc.contains("engines")) {
    const auto& v = doc.at("engines");
    if (!v.is_array()) bad("engines", "expected an array");
    c.engines.clear();
    for (std::size_t i = 0; i < v.size(); ++i) c.engines.push_back(engine_from(v[i], "engines[" + std::to_string(i) + "]"));
  }
  if (doc.contains("asym")) {
    const auto& a = doc.at("asym");
    if (a.contains("order")) c.asym_order = integer(a.at("order"), "asym.order");
    if (c.asym_order < 0) bad("asym.order", "must be nonnegative");
  }
  if (doc.contains("fd")) {
    const auto& f = doc.at("fd");
    if (f.contains("N")) c.fd.N = integer(f.at("N"), "fd.N");
    if (f.contains("r_max")) c.fd.r_max = number(f.at("r_max"), "fd.r_max");
    if (f.contains("pml_start")) c.fd.pml_start = number(f.at("pml_start"), "fd.pml_start");
    if (f.contains("theta")) c.fd.theta = number(f.at("theta"), "fd.theta");
    if (c.fd.N < 500) bad("fd.N", "must be at least 500");
  }
  if (doc.contains("modes")) {
    const auto& md = doc.at("modes");
    if (md.contains("engine")) c.mode_engine = engine_from(md.at("engine"), "modes.engine");
    if (md.contains("points")) c.mode_points = integer(md.at("points"), "modes.points");
    if (md.contains("r_max")) c.mode_r_max = number(md.at("r_max"), "modes.r_max");
    if (c.mode_points < 10) bad("modes.points", "must be at least 10");
  }
  if (doc.contains("convergence")) {
    const auto& cv = doc.at("convergence");
    if (cv.contains("orders")) c.orders = int_list(cv.at("orders"), "convergence.orders");
    if (cv.contains("oracle")) c.oracle = engine_from(cv.at("oracle"), "convergence.oracle");
    if (c.oracle == Engine::asym) bad("convergence.oracle", "must be modal or fd");
  }
  if (doc.contains("output") && doc.at("output").contains("dir")) {
    const auto& d = doc.at("output").at("dir");
    if (!d.is_string()) bad("output.dir", "expected a string");
    c.out_dir = d.get<std::string>();
  }

  const bool modal_used = c.has(Engine::modal) || c.mode_engine == Engine::modal ||
                          (!c.orders.empty() && c.oracle == Engine::modal);
  if (modal_used && c.profile->family() != Family::constant)
    bad("engines", "the modal engine needs a constant-index profile");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, path + ": cannot open");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << path << ":" << line << ":" << col << ": " << e.what();
    fail(Errc::ConfigError, msg.str());
  }
  return parse_config(doc);
}

}  // namespace wgm::cli
