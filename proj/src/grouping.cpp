#include "zrot/grouping.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zrot {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kFeasibleTol = 1e-10;

std::vector<double> shape_offsets(const Shape& s) {
    const double o = s.orientation >= 0 ? 1.0 : -1.0;
    if (s.kind == Shape::Kind::Pair) return {0.0, o * pi};
    return {0.0, -o * 2 * pi / 3, -o * 4 * pi / 3};
}

// sign of phi'_j in the target constraint: odd indices -, even +
double closure_sign(int j) { return j % 2 == 0 ? 1.0 : -1.0; }

void validate(const GroupingSpec& spec) {
    if (spec.n != 4 && spec.n != 6) throw std::invalid_argument("grouping explorer supports n = 4 or 6");
    std::vector<int> seen(spec.n + 1, 0);
    int free_shapes = 0;
    for (const Shape& s : spec.shapes) {
        const std::size_t want = s.kind == Shape::Kind::Pair ? 2 : 3;
        if (s.indices.size() != want) throw std::invalid_argument("shape has the wrong number of indices");
        for (int j : s.indices) {
            if (j < 1 || j > spec.n) throw std::invalid_argument("shape index out of range");
            if (seen[j]++) throw std::invalid_argument("index " + std::to_string(j) + " used twice");
        }
        if (!s.anchor) ++free_shapes;
    }
    for (int j = 1; j <= spec.n; ++j)
        if (!seen[j]) throw std::invalid_argument("index " + std::to_string(j) + " not covered");
    if (free_shapes > 1) throw std::invalid_argument("at most one shape may be unanchored");
}

}  // namespace

std::variant<TogglingPhases, Infeasible> grouped_toggling(const GroupingSpec& spec, double Phi) {
    validate(spec);
    std::vector<double> tog(spec.n, 0.0);
    const Shape* free_shape = nullptr;
    double fixed = 0;  // sum of sign * phi' over anchored shapes
    for (const Shape& s : spec.shapes) {
        if (!s.anchor) {
            free_shape = &s;
            continue;
        }
        const auto d = shape_offsets(s);
        for (std::size_t m = 0; m < d.size(); ++m) {
            const int j = s.indices[m];
            tog[j - 1] = *s.anchor + d[m];
            fixed += closure_sign(j) * tog[j - 1];
        }
    }

    double x = 0;
    if (free_shape) {
        const auto d = shape_offsets(*free_shape);
        double coeff = 0, shift = 0;
        for (std::size_t m = 0; m < d.size(); ++m) {
            coeff += closure_sign(free_shape->indices[m]);
            shift += closure_sign(free_shape->indices[m]) * d[m];
        }
        if (coeff != 0) {
            x = ((-Phi + 2 * pi * spec.winding) / 2 - fixed - shift) / coeff;
        } else {
            // the free shape drops out of the constraint; nothing to solve for
            fixed += shift;
        }
        for (std::size_t m = 0; m < d.size(); ++m) tog[free_shape->indices[m] - 1] = x + d[m];
        if (coeff != 0) return TogglingPhases(std::move(tog));
    }

    const double miss = circular_distance(2 * fixed, -Phi);
    if (miss > kFeasibleTol)
        return Infeasible{"grouping cannot satisfy the target constraint for this Phi", miss};
    return TogglingPhases(std::move(tog));
}

std::variant<PulseSequence, Infeasible> grouped_polygon_sequence(const GroupingSpec& spec, double Phi) {
    auto t = grouped_toggling(spec, Phi);
    if (auto* bad = std::get_if<Infeasible>(&t)) return *bad;
    const PhaseList lab = from_toggling(std::get<TogglingPhases>(t));
    std::vector<Pulse> pulses;
    for (double p : lab.values()) pulses.push_back({pi, p});
    return PulseSequence(std::move(pulses), Phi, "grouped");
}

}  // namespace zrot
