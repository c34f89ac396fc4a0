#include "zrot/scan.hpp"

#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace zrot {

namespace {

GridScan make_grid(Range eps, Range f, int n_eps, int n_f) {
    GridScan g;
    g.epsilon = grid_axis(eps, n_eps);
    g.f = grid_axis(f, n_f);
    g.fidelity.assign(g.epsilon.size() * g.f.size(), 0.0);
    return g;
}

}  // namespace

std::vector<double> grid_axis(Range r, int n) {
    if (n < 2) throw std::invalid_argument("grid resolution must be at least 2");
    if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max))
        throw std::invalid_argument("grid range must be finite with min < max");
    std::vector<double> v(n);
    const double d = n - 1;
    for (int i = 0; i < n; ++i) v[i] = ((n - 1 - i) * r.min + i * r.max) / d;
    return v;
}

GridScan scan_grid_serial(const PulseSequence& seq, Range eps, Range f, int n_eps, int n_f) {
    GridScan g = make_grid(eps, f, n_eps, n_f);
    const Unitary2 target = ideal_z(seq.target_phi());
    for (std::size_t fi = 0; fi < g.f.size(); ++fi)
        for (std::size_t ei = 0; ei < g.epsilon.size(); ++ei)
            g.fidelity[fi * g.epsilon.size() + ei] = fidelity(target, propagate(seq, {g.epsilon[ei], g.f[fi]}));
    return g;
}

GridScan scan_grid(const PulseSequence& seq, Range eps, Range f, int n_eps, int n_f, int threads) {
    GridScan g = make_grid(eps, f, n_eps, n_f);
    const Unitary2 target = ideal_z(seq.target_phi());
    const long ne = static_cast<long>(g.epsilon.size());
    const long total = static_cast<long>(g.fidelity.size());
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long k = 0; k < total; ++k) {
        const long fi = k / ne, ei = k % ne;
        g.fidelity[k] = fidelity(target, propagate(seq, {g.epsilon[ei], g.f[fi]}));
    }
    return g;
}

}  // namespace zrot
