#include "zrot/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zrot {

using nlohmann::json;

json to_json(const PulseSequence& seq) {
    json pulses = json::array();
    for (const Pulse& p : seq.pulses()) pulses.push_back({{"theta", p.theta}, {"phase", p.phase}});
    return {{"label", seq.label()}, {"target_phi", seq.target_phi()}, {"pulses", pulses}};
}

PulseSequence sequence_from_json(const json& j) {
    try {
        std::vector<Pulse> pulses;
        for (const json& p : j.at("pulses")) pulses.push_back({p.at("theta").get<double>(), p.at("phase").get<double>()});
        return PulseSequence(std::move(pulses), j.at("target_phi").get<double>(), j.value("label", std::string()));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed sequence JSON: ") + e.what());
    }
}

PulseSequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return sequence_from_json(j);
}

json to_json(const OrderEstimate& e) {
    return {{"exponent", e.exponent},         {"rounded_order", e.rounded_order},
            {"integral", e.integral},         {"coefficient", e.coefficient},
            {"fit_residual", e.fit_residual}, {"window", {e.window_min, e.window_max}}};
}

json to_json(const ConditionReport& r) {
    return {{"tolerance", r.tol},
            {"residuals",
             {{"target_closure", r.closure}, {"pse_order1", r.pse1}, {"pse_order2", r.pse2},
              {"ore_order1", r.ore1}, {"ore_order2", r.ore2}}},
            {"closure_ok", r.closure_ok()},
            {"pse_order", r.pse_order()},
            {"ore_order", r.ore_order()}};
}

void write_scan_csv(std::ostream& os, const GridScan& g) {
    os << "epsilon,f,fidelity\n";
    char buf[96];
    for (std::size_t fi = 0; fi < g.f.size(); ++fi)
        for (std::size_t ei = 0; ei < g.epsilon.size(); ++ei) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.epsilon[ei], g.f[fi], g.at(ei, fi));
            os << buf;
        }
}

GridScan read_scan_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "epsilon,f,fidelity")
        throw std::invalid_argument("scan CSV: missing header");
    std::vector<double> eps_seen, f_seen, vals;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double e, f, v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &e, &f, &v) != 3)
            throw std::invalid_argument("scan CSV: bad row '" + line + "'");
        if (f_seen.empty() || f_seen.back() != f) f_seen.push_back(f);
        if (f_seen.size() == 1) eps_seen.push_back(e);
        vals.push_back(v);
    }
    if (eps_seen.empty() || vals.size() != eps_seen.size() * f_seen.size())
        throw std::invalid_argument("scan CSV: rows do not form a rectangular grid");
    return {std::move(eps_seen), std::move(f_seen), std::move(vals)};
}

}  // namespace zrot
