#pragma once

#include <vector>

#include "zrot/pulse.hpp"

namespace zrot {

struct Range {
    double min = -1;
    double max = 1;
};

// Fidelity over an (epsilon, f) rectangle. Values are f-major: the f index is
// the outer loop, value(ei, fi) = fidelity[fi * epsilon.size() + ei].
struct GridScan {
    std::vector<double> epsilon;
    std::vector<double> f;
    std::vector<double> fidelity;

    double at(std::size_t ei, std::size_t fi) const { return fidelity[fi * epsilon.size() + ei]; }
};

// n evenly spaced samples including both ends; symmetric ranges give exactly
// mirrored samples.
std::vector<double> grid_axis(Range r, int n);

// threads <= 0 uses the OpenMP default
GridScan scan_grid(const PulseSequence& seq, Range eps, Range f, int n_eps, int n_f, int threads = 0);
GridScan scan_grid_serial(const PulseSequence& seq, Range eps, Range f, int n_eps, int n_f);

}  // namespace zrot
