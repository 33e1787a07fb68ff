#include "wgm/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "wgm/errors.hpp"

namespace wgm {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "modal") return Provenance::modal;
  if (s == "fd") return Provenance::fd;
  if (s == "asymptotic") return Provenance::asymptotic;
  fail(Errc::ConfigError, "unknown provenance '" + s + "'");
}

void write_resonance_csv_header(std::ostream& os) { os << kResonanceCsvHeader << '\n'; }

void write_resonance_csv_row(std::ostream& os, const Resonance& r) {
  os << r.m << ',' << (r.j ? std::to_string(*r.j) : std::string()) << ',' << r.p << ',' << format_double(r.k.real()) << ','
     << format_double(r.k.imag()) << ',' << format_double(std::log10(std::abs(r.k.imag()))) << ','
     << format_double(r.q_factor) << ',' << to_string(r.provenance) << '\n';
}

void write_resonances_csv(std::ostream& os, const std::vector<Resonance>& res) {
  write_resonance_csv_header(os);
  for (const auto& r : res) write_resonance_csv_row(os, r);
}

nlohmann::json to_json(const Resonance& r) {
  nlohmann::json j = {{"m", r.m},
                      {"p", r.p},
                      {"re_k", r.k.real()},
                      {"im_k", r.k.imag()},
                      {"q_factor", r.q_factor},
                      {"multiplicity", r.multiplicity},
                      {"provenance", to_string(r.provenance)}};
  j["j"] = r.j ? nlohmann::json(*r.j) : nlohmann::json(nullptr);
  return j;
}

Resonance resonance_from_json(const nlohmann::json& j) {
  try {
    std::optional<int> radial;
    if (j.contains("j") && !j.at("j").is_null()) radial = j.at("j").get<int>();
    Resonance r = make_resonance({j.at("re_k").get<double>(), j.at("im_k").get<double>()}, j.at("m").get<int>(),
                                 j.at("p").get<int>(), provenance_from_string(j.at("provenance").get<std::string>()), radial);
    if (j.contains("multiplicity")) r.multiplicity = j.at("multiplicity").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ConfigError, std::string("resonance record: ") + e.what());
  }
}

}  // namespace wgm
