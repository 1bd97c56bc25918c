#ifndef SILENCE_IO_HPP
#define SILENCE_IO_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "silence/bounds.hpp"
#include "silence/centering.hpp"
#include "silence/heuristics.hpp"
#include "silence/simulator.hpp"

namespace silence {

/// Parses {"kind": "<identifier>", "params": {<name>: <number>, ...}}.
/// Unknown keys, non-numeric parameters and malformed JSON throw
/// InvalidParameter.
Density density_from_json(const nlohmann::json& config);
Density density_from_json_text(std::string_view text);

/// 15 significant digits, shortest form, locale independent.
std::string format_number(double value);

void write_scan_csv(std::ostream& out, const std::vector<ScanEntry>& scan);
void write_trace_csv(std::ostream& out, const CenteringTrace& trace);
/// Rows: every family per eta, then an "optimal" row. Families without a
/// member are written with "absent" in place of the numbers.
void write_family_csv(std::ostream& out, const FamilySweep& sweep);
void write_curve_csv(std::ostream& out, const FamilySweep& sweep);
void write_fig6_csv(std::ostream& out, const Fig6Curves& curves);

nlohmann::json to_json(const SimReport& report);
nlohmann::json to_json(const SilenceDesign& design);

}  // namespace silence

#endif  // SILENCE_IO_HPP
