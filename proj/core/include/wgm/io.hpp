#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wgm/modal.hpp"

namespace wgm {

// Shortest text that reads back to the same double (at most 17 significant digits).
std::string format_double(double x);

inline constexpr const char* kResonanceCsvHeader = "m,j,p,re_k,im_k,log10_abs_im_k,q_factor,provenance";

void write_resonance_csv_header(std::ostream& os);
void write_resonance_csv_row(std::ostream& os, const Resonance& r);
void write_resonances_csv(std::ostream& os, const std::vector<Resonance>& res);

nlohmann::json to_json(const Resonance& r);
Resonance resonance_from_json(const nlohmann::json& j);

Provenance provenance_from_string(const std::string& s);

}  // namespace wgm
