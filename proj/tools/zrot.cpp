// zrot: build, verify and analyse composite pi-pulse sequences for z rotations.
//
// Exit codes: 0 ok, 1 verification failed, 2 bad or unsupported request.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zrot/analysis.hpp"
#include "zrot/angle.hpp"
#include "zrot/catalog.hpp"
#include "zrot/io.hpp"
#include "zrot/pulse.hpp"
#include "zrot/scan.hpp"
#include "zrot/toggling.hpp"

using nlohmann::json;
using namespace zrot;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kBadRequest = 2;

struct BadRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceOptions {
    std::vector<std::string> families;
    std::string sequence_path;
    std::string phi = "1pi";
    int branch = 1;
    int n = 0;
    int j1 = 0;
    int j2 = 0;
    std::string alpha = "0";
    int orientation = 1;
};

void add_source_options(CLI::App* cmd, SourceOptions& o, bool many_families = false) {
    auto* fam = cmd->add_option("--family", o.families, many_families ? "family names (comma separated)" : "family name");
    if (many_families) fam->delimiter(',');
    else fam->expected(1);
    cmd->add_option("--phi", o.phi, "target angle, radians or '<x>pi'")->capture_default_str();
    cmd->add_option("--branch", o.branch, "branch sign for +/- families")->capture_default_str();
    cmd->add_option("--n", o.n, "pulse count (general family)");
    cmd->add_option("--j1", o.j1, "odd-polygon offset index (general family)")->capture_default_str();
    cmd->add_option("--j2", o.j2, "even-polygon offset index (general family)")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "polygon rotation (general family)")->capture_default_str();
    cmd->add_option("--orientation", o.orientation, "+1 or -1 (general family)")->capture_default_str();
    if (!many_families) cmd->add_option("--sequence", o.sequence_path, "JSON sequence file instead of a family");
}

BuildParams build_params(const SourceOptions& o, FamilyId id) {
    if (o.branch != 1 && o.branch != -1) throw BadRequest("--branch must be +1 or -1");
    BuildParams p;
    p.branch = o.branch;
    if (id == FamilyId::general) {
        if (o.n == 0) throw BadRequest("family 'general' needs --n");
        p.general = GeneralFamilyParams{o.n, parse_angle(o.alpha), o.j1, o.j2, o.orientation};
    }
    return p;
}

struct Source {
    PulseSequence seq;
    std::optional<FamilyId> family;
};

Source load_source(const SourceOptions& o) {
    if (!o.sequence_path.empty()) {
        if (!o.families.empty()) throw BadRequest("give either --family or --sequence, not both");
        return {read_sequence_file(o.sequence_path), std::nullopt};
    }
    if (o.families.size() != 1) throw BadRequest("exactly one --family (or --sequence) is required");
    const FamilyId id = parse_family(o.families.front());
    return {build(id, parse_angle(o.phi), build_params(o, id)), id};
}

std::pair<int, int> claimed_orders(const Source& s) {
    if (!s.family) return {0, 0};
    if (*s.family == FamilyId::general) {
        const int k = (static_cast<int>(s.seq.size()) - 2) / 2;
        return {k, k};
    }
    const FamilyInfo& info = family_info(*s.family);
    return {info.i, info.j};
}

// Relative paths land in $ZROT_OUTPUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    const char* dir = std::getenv("ZROT_OUTPUT_DIR");
    if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
    return p;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    const auto path = resolve_out(out);
    std::ofstream f(path);
    if (!f) throw BadRequest("cannot write " + path.string());
    f << text;
    if (!f) throw BadRequest("write failed for " + path.string());
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double wrap_2pi(double a) {
    const double t = 2 * std::numbers::pi;
    double r = std::fmod(a, t);
    if (r < 0) r += t;
    return r;
}

void check_format(const std::string& fmt_, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt_ == a) return;
    throw BadRequest("unsupported --format '" + fmt_ + "'");
}

// ---------------------------------------------------------------- commands

int cmd_list(bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const FamilyInfo& f : family_table()) {
            json row = {{"name", f.name}, {"construction", f.construction}, {"needs_params", f.needs_params}};
            row["n"] = f.n > 0 ? json(f.n) : json(nullptr);
            row["i"] = f.i >= 0 ? json(f.i) : json(nullptr);
            row["j"] = f.j >= 0 ? json(f.j) : json(nullptr);
            arr.push_back(row);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::printf("%-16s %3s %3s %3s  %s\n", "family", "n", "i", "j", "construction");
    for (const FamilyInfo& f : family_table()) {
        auto num = [](int v) { return v >= 0 ? std::to_string(v) : std::string("*"); };
        std::printf("%-16s %3s %3s %3s  %s\n", std::string(f.name).c_str(), (f.n > 0 ? std::to_string(f.n) : "n").c_str(),
                    num(f.i).c_str(), num(f.j).c_str(), std::string(f.construction).c_str());
    }
    return 0;
}

int cmd_build(const SourceOptions& o, const std::string& format, const std::string& out) {
    check_format(format, {"json", "text"});
    const Source s = load_source(o);
    if (format == "json") {
        emit(out, to_json(s.seq).dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << s.seq.label() << "  Phi = " << fmt("%.12g", s.seq.target_phi()) << "  T = " << fmt("%.6g", time_cost(s.seq))
       << "\n";
    os << "  #  theta/pi   phase/pi (mod 2)   phase (rad, mod 2pi)\n";
    for (std::size_t k = 0; k < s.seq.size(); ++k) {
        const Pulse& p = s.seq.pulses()[k];
        const double w = wrap_2pi(p.phase);
        char buf[128];
        std::snprintf(buf, sizeof buf, "%3zu  %8.6f   %14.10f   %.15f\n", k + 1, p.theta / std::numbers::pi,
                      w / std::numbers::pi, w);
        os << buf;
    }
    emit(out, os.str());
    return 0;
}

int cmd_verify(const SourceOptions& o, double tol, int require_order, const std::string& format) {
    check_format(format, {"text", "json"});
    if (!(tol > 0)) throw BadRequest("--tolerance must be positive");
    const Source s = load_source(o);
    auto [ci, cj] = claimed_orders(s);
    if (require_order >= 0) ci = cj = require_order;

    const double f0 = s.seq.closure_fidelity();
    const bool closed = f0 >= 1 - 1e-12;
    json j = {{"label", s.seq.label()}, {"target_phi", s.seq.target_phi()}, {"closure_fidelity", f0},
              {"claimed", {{"pse", ci}, {"ore", cj}}}};
    bool pass = closed;
    std::ostringstream os;
    os << s.seq.label() << "  n = " << s.seq.size() << "  Phi = " << fmt("%.12g", s.seq.target_phi()) << "\n";
    os << "  fidelity at zero error      " << fmt("%.17g", f0) << (closed ? "  ok" : "  FAIL") << "\n";

    if (s.seq.all_pi() && s.seq.size() % 2 == 0) {
        const ConditionReport r = check_conditions(to_toggling(PhaseList(s.seq.phases())), s.seq.target_phi(), tol);
        j["method"] = "algebraic";
        j["report"] = to_json(r);
        const int need_i = std::min(ci, 2), need_j = std::min(cj, 2);
        pass = pass && r.closure_ok() && r.pse_order() >= need_i && r.ore_order() >= need_j;
        const char* names[] = {"target closure", "pse order 1", "pse order 2", "ore order 1", "ore order 2"};
        const auto res = r.residuals();
        for (int k = 0; k < 5; ++k)
            os << "  " << names[k] << std::string(28 - std::string(names[k]).size(), ' ')
               << fmt("%.3e", res[k]) << (res[k] <= tol ? "  ok" : "  --") << "\n";
        os << "  algebraic orders            pse " << r.pse_order() << ", ore " << r.ore_order() << "\n";
        if (ci > 2 || cj > 2) os << "  (orders above 2 are checked numerically by 'order')\n";
    } else {
        const Classification c = classify(s.seq);
        j["method"] = "numeric";
        j["i"] = c.i ? json(*c.i) : json("exact");
        j["j"] = c.j ? json(*c.j) : json("exact");
        pass = pass && (!c.i || *c.i >= ci) && (!c.j || *c.j >= cj);
        os << "  numeric orders              pse " << (c.i ? std::to_string(*c.i) : "exact") << ", ore "
           << (c.j ? std::to_string(*c.j) : "exact") << "\n";
        for (const auto& w : c.warnings) os << "  warning: " << w << "\n";
    }
    j["pass"] = pass;
    os << "  claimed pse " << ci << ", ore " << cj << "  ->  " << (pass ? "PASS" : "FAIL") << "\n";
    std::cout << (format == "json" ? j.dump(2) + "\n" : os.str());
    return pass ? 0 : kVerifyFailed;
}

Range parse_range(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw BadRequest("range must be 'min,max'");
    return {parse_angle(text.substr(0, comma)), parse_angle(text.substr(comma + 1))};
}

int cmd_scan(const SourceOptions& o, int grid, const std::string& eps_range, const std::string& f_range, int threads,
             const std::string& format, const std::string& out) {
    check_format(format, {"csv", "json"});
    const Source s = load_source(o);
    GridScan g;
    try {
        g = scan_grid(s.seq, parse_range(eps_range), parse_range(f_range), grid, grid, threads);
    } catch (const std::invalid_argument& e) {
        throw BadRequest(e.what());
    }
    std::ostringstream os;
    if (format == "csv") {
        write_scan_csv(os, g);
    } else {
        os << json{{"label", s.seq.label()}, {"target_phi", s.seq.target_phi()}, {"layout", "f-major"},
                   {"epsilon", g.epsilon}, {"f", g.f}, {"fidelity", g.fidelity}}
                  .dump()
           << "\n";
    }
    emit(out, os.str());
    return 0;
}

int cmd_order(const SourceOptions& o, const std::string& axis) {
    const Source s = load_source(o);
    const Axis a = parse_axis(axis);
    json j = {{"label", s.seq.label()}, {"target_phi", s.seq.target_phi()}, {"axis", to_string(a)}};
    try {
        j.update(to_json(infidelity_order(s.seq, a)));
    } catch (const DegenerateFlat& e) {
        j["exact"] = true;
        j["message"] = e.what();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_compare(const SourceOptions& o, bool cccp, const std::string& format, const std::string& out) {
    check_format(format, {"text", "csv", "json"});
    if (o.families.empty() && !cccp) throw BadRequest("compare needs --family a,b,... or --cccp");
    const double Phi = parse_angle(o.phi);
    std::vector<CompareRequest> req;
    std::vector<CompareRow> bad_names;
    for (const std::string& name : o.families) {
        try {
            const FamilyId id = parse_family(name);
            req.push_back({id, build_params(o, id)});
        } catch (const std::exception& e) {
            CompareRow row;
            row.label = name;
            row.phi = Phi;
            row.time_cost = std::nan("");
            row.error = e.what();
            bad_names.push_back(row);
        }
    }
    std::vector<CompareRow> rows = compare(req, Phi, cccp);
    rows.insert(rows.end(), bad_names.begin(), bad_names.end());

    auto order_str = [](const std::optional<OrderEstimate>& e, bool ok) {
        if (!ok) return std::string("");
        if (!e) return std::string("exact");
        return std::to_string(e->rounded_order);
    };
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const CompareRow& r : rows) {
            json row = {{"label", r.label}, {"phi", r.phi}, {"informational", r.informational}};
            row["time_cost"] = std::isnan(r.time_cost) ? json(nullptr) : json(r.time_cost);
            if (!r.error.empty()) row["error"] = r.error;
            if (!r.informational && r.error.empty()) {
                row["pse"] = r.pse ? to_json(*r.pse) : json("exact");
                row["ore"] = r.ore ? to_json(*r.ore) : json("exact");
                row["i"] = r.i ? json(*r.i) : json("exact");
                row["j"] = r.j ? json(*r.j) : json("exact");
            }
            arr.push_back(row);
        }
        os << arr.dump(2) << "\n";
    } else {
        const bool csv = format == "csv";
        if (csv)
            os << "label,phi,time_cost,pse_order,pse_coefficient,ore_order,ore_coefficient,i,j,note\n";
        else
            os << "family             T        pse ord  pse coeff     ore ord  ore coeff     (i,j)    note\n";
        for (const CompareRow& r : rows) {
            const bool ok = r.error.empty() && !r.informational;
            const std::string po = order_str(r.pse, ok), oo = order_str(r.ore, ok);
            const std::string pc = ok && r.pse ? fmt("%.6g", r.pse->coefficient) : "";
            const std::string oc = ok && r.ore ? fmt("%.6g", r.ore->coefficient) : "";
            const std::string ij = ok ? "(" + (r.i ? std::to_string(*r.i) : "x") + "," +
                                            (r.j ? std::to_string(*r.j) : "x") + ")"
                                      : "";
            const std::string T = std::isnan(r.time_cost) ? "" : fmt("%.4g", r.time_cost);
            const std::string note = !r.error.empty() ? "error: " + r.error : (r.informational ? "time cost only" : "");
            if (csv) {
                os << r.label << "," << fmt("%.17g", r.phi) << "," << T << "," << po << "," << pc << "," << oo << ","
                   << oc << "," << (ok && r.i ? std::to_string(*r.i) : "") << ","
                   << (ok && r.j ? std::to_string(*r.j) : "") << ",\"" << note << "\"\n";
            } else {
                char buf[512];
                std::snprintf(buf, sizeof buf, "%-18s %-8s %-8s %-13s %-8s %-13s %-8s %s\n", r.label.c_str(), T.c_str(),
                              po.c_str(), pc.c_str(), oo.c_str(), oc.c_str(), ij.c_str(), note.c_str());
                os << buf;
            }
        }
    }
    emit(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composite pi-pulse sequences for robust z rotations"};
    app.require_subcommand(1);

    bool list_json = false;
    auto* list = app.add_subcommand("list", "list the family catalog");
    list->add_flag("--json", list_json, "machine-readable table");

    SourceOptions build_o, verify_o, scan_o, order_o, compare_o;
    std::string build_format = "json", build_out;
    auto* buildc = app.add_subcommand("build", "construct a sequence and print it");
    add_source_options(buildc, build_o);
    buildc->add_option("--format", build_format, "json | text")->capture_default_str();
    buildc->add_option("--out", build_out, "output file");

    double tol = 1e-9;
    int require_order = -1;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "check the toggling-frame conditions");
    add_source_options(verify, verify_o);
    verify->add_option("--tolerance", tol, "residual tolerance")->capture_default_str();
    verify->add_option("--require-order", require_order, "require this correction order on both axes");
    verify->add_option("--format", verify_format, "text | json")->capture_default_str();

    int grid = 201, threads = 0;
    std::string eps_range = "-1,1", f_range = "-1,1", scan_format = "csv", scan_out;
    auto* scan = app.add_subcommand("scan", "fidelity over an (epsilon, f) grid");
    add_source_options(scan, scan_o);
    scan->add_option("--grid", grid, "samples per axis")->capture_default_str();
    scan->add_option("--eps-range", eps_range, "min,max")->capture_default_str();
    scan->add_option("--f-range", f_range, "min,max")->capture_default_str();
    scan->add_option("--threads", threads, "worker threads (0 = default)");
    scan->add_option("--format", scan_format, "csv | json")->capture_default_str();
    scan->add_option("--out", scan_out, "output file");

    std::string axis = "pse";
    auto* order = app.add_subcommand("order", "estimate the infidelity order along one axis");
    add_source_options(order, order_o);
    order->add_option("--axis", axis, "pse | ore")->capture_default_str();

    bool cccp = false;
    std::string compare_format = "text", compare_out;
    auto* comparec = app.add_subcommand("compare", "side-by-side orders, coefficients and time cost");
    add_source_options(comparec, compare_o, true);
    comparec->add_flag("--cccp", cccp, "append concatenated-pulse time-cost rows");
    comparec->add_option("--format", compare_format, "text | csv | json")->capture_default_str();
    comparec->add_option("--out", compare_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadRequest;
    }

    try {
        if (*list) return cmd_list(list_json);
        if (*buildc) return cmd_build(build_o, build_format, build_out);
        if (*verify) return cmd_verify(verify_o, tol, require_order, verify_format);
        if (*scan) return cmd_scan(scan_o, grid, eps_range, f_range, threads, scan_format, scan_out);
        if (*order) return cmd_order(order_o, axis);
        if (*comparec) return cmd_compare(compare_o, cccp, compare_format, compare_out);
    } catch (const std::exception& e) {
        std::cerr << "zrot: " << e.what() << "\n";
        return kBadRequest;
    }
    return kBadRequest;
}
