#pragma once

// JSON domain specs, CSV tables and static SVG line charts.

#include "hypspeed/comb_builder.hpp"
#include "hypspeed/speeds.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hypspeed {

/// {"type":"sector","p":[re,im],"alpha":a,"beta":b} | {"type":"strip","r":r} |
/// {"type":"halfplane","p":[re,im]} | {"type":"koebe","p":[re,im]} |
/// {"type":"comb","teeth":[[a,b],...]}. Throws ValidationError.
DomainSpec domain_from_json(const nlohmann::json& j);
/// Parses text first; malformed JSON also raises ValidationError.
DomainSpec domain_from_text(const std::string& text);
nlohmann::ordered_json domain_to_json(const DomainSpec& domain);

/// %.17g
std::string format_number(double x);

void write_speeds_csv(std::ostream& os, std::span<const SpeedSample> samples);
void write_comb_ratios_csv(std::ostream& os, std::span<const CombRatio> ratios);
nlohmann::ordered_json comb_to_json(const CombConstruction& cc);
nlohmann::ordered_json fit_to_json(const AsymptoticFit& fit);

/// Line chart of the chosen columns (v, v_o, v_T, log_rho, theta) against log10 t.
std::string render_svg(std::span<const SpeedSample> samples, const std::vector<std::string>& columns,
                       const std::string& title);

}  // namespace hypspeed
