#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zrot/pulse.hpp"
#include "zrot/toggling.hpp"

namespace zrot {

// A rigid group of toggling-frame unit vectors.
//   Pair:     phi'[b] = phi'[a] + orientation * pi
//   Triangle: phi'[i_m] = anchor - m * orientation * 2pi/3,  m = 0, 1, 2
// Indices are 1-based. The anchor pins phi' of the first listed index.
struct Shape {
    enum class Kind { Pair, Triangle };
    Kind kind = Kind::Pair;
    std::vector<int> indices;
    int orientation = +1;
    std::optional<double> anchor;
};

// At most one shape may be left unanchored; its anchor is then solved from
// the target constraint on the winding branch -Phi + 2pi * winding.
struct GroupingSpec {
    int n = 4;
    std::vector<Shape> shapes;
    int winding = 0;
};

struct Infeasible {
    std::string reason;
    double residual = 0;  // circular distance by which the target constraint is missed
};

std::variant<TogglingPhases, Infeasible> grouped_toggling(const GroupingSpec& spec, double Phi);
std::variant<PulseSequence, Infeasible> grouped_polygon_sequence(const GroupingSpec& spec, double Phi);

}  // namespace zrot
