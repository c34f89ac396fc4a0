#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "zrot/analysis.hpp"
#include "zrot/pulse.hpp"
#include "zrot/scan.hpp"
#include "zrot/toggling.hpp"

namespace zrot {

// {"label": ..., "target_phi": ..., "pulses": [{"theta": ..., "phase": ...}, ...]}
nlohmann::json to_json(const PulseSequence& seq);
PulseSequence sequence_from_json(const nlohmann::json& j);  // throws std::invalid_argument
PulseSequence read_sequence_file(const std::string& path);

nlohmann::json to_json(const OrderEstimate& e);
nlohmann::json to_json(const ConditionReport& r);

// header "epsilon,f,fidelity", f-major rows, 17 significant digits
void write_scan_csv(std::ostream& os, const GridScan& g);
GridScan read_scan_csv(std::istream& is);

}  // namespace zrot
