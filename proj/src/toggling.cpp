#include "zrot/toggling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zrot {

namespace {

void validate(const std::vector<double>& v, const char* what) {
    if (v.empty() || v.size() % 2 != 0)
        throw std::invalid_argument(std::string(what) + " must have even, nonzero length");
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " entry is not finite");
}

double alt(std::size_t j0) { return j0 % 2 == 0 ? 1.0 : -1.0; }  // (-1)^(j+1) with j = j0+1

double vector_sum_residual(const std::vector<double>& v) {
    double c = 0, s = 0;
    for (double x : v) {
        c += std::cos(x);
        s += std::sin(x);
    }
    return std::max(std::abs(c), std::abs(s));
}

double pair_sine_residual(const std::vector<double>& v) {
    double acc = 0;
    for (std::size_t j = 1; j < v.size(); ++j)
        for (std::size_t k = 0; k < j; ++k) acc += std::sin(v[j] - v[k]);
    return std::abs(acc);
}

}  // namespace

PhaseList::PhaseList(std::vector<double> values) : v_(std::move(values)) { validate(v_, "phase list"); }

TogglingPhases::TogglingPhases(std::vector<double> values) : v_(std::move(values)) {
    validate(v_, "toggling phase list");
}

TogglingPhases to_toggling(const PhaseList& phases) {
    std::vector<double> out(phases.size());
    double acc = 0;
    for (std::size_t j = 0; j < phases.size(); ++j) {
        out[j] = alt(j) * phases[j] + acc;
        acc += alt(j) * 2 * phases[j];
    }
    return TogglingPhases(std::move(out));
}

PhaseList from_toggling(const TogglingPhases& toggling) {
    std::vector<double> out(toggling.size());
    double acc = 0;
    for (std::size_t j = 0; j < toggling.size(); ++j) {
        out[j] = alt(j) * (toggling[j] - acc);
        acc += alt(j) * 2 * out[j];
    }
    return PhaseList(std::move(out));
}

TogglingPhases modified_phases(const TogglingPhases& toggling, int sign) {
    std::vector<double> out = toggling.values();
    const double s = sign >= 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += s * alt(j) * std::numbers::pi / 2;
    return TogglingPhases(std::move(out));
}

double circular_distance(double a, double b) {
    const double two_pi = 2 * std::numbers::pi;
    double d = std::fmod(a - b, two_pi);
    if (d < 0) d += two_pi;
    return std::min(d, two_pi - d);
}

int ConditionReport::pse_order() const {
    if (pse1 > tol) return 0;
    return pse2 <= tol ? 2 : 1;
}

int ConditionReport::ore_order() const {
    if (ore1 > tol) return 0;
    // second order in f also needs the first-order strength condition
    return (ore2 <= tol && pse1 <= tol) ? 2 : 1;
}

ConditionReport check_conditions(const TogglingPhases& toggling, double Phi, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const std::vector<double>& t = toggling.values();
    ConditionReport r;
    r.tol = tol;
    double diff = 0;
    for (std::size_t j = 0; j + 1 < t.size(); j += 2) diff += t[j + 1] - t[j];
    r.closure = circular_distance(2 * diff, -Phi);
    r.pse1 = vector_sum_residual(t);
    r.pse2 = pair_sine_residual(t);
    const TogglingPhases mod = modified_phases(toggling);
    const std::vector<double>& m = mod.values();
    r.ore1 = vector_sum_residual(m);
    r.ore2 = pair_sine_residual(m);
    return r;
}

}  // namespace zrot
