#include "zrot/su2.hpp"

#include <algorithm>

namespace zrot {

Unitary2 rotation(double theta, double phase) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const double cp = std::cos(phase);
    const double sp = std::sin(phase);
    return {{c, 0.0}, {-s * sp, -s * cp}, {s * sp, -s * cp}, {c, 0.0}};
}

Unitary2 perturbed_rotation(double theta, double phase, double epsilon, double f) {
    return perturbed_rotation<double>(theta, phase, epsilon, f);
}

Unitary2 ideal_z(double Phi) {
    const double c = std::cos(Phi / 2);
    const double s = std::sin(Phi / 2);
    return {{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}};
}

double fidelity(const Unitary2& U, const Unitary2& V) {
    const double F = abs((U.adjoint() * V).trace()) / 2;
    // absorb round-off only; anything larger is reported as is
    if (F > 1.0 && F <= 1.0 + 1e-12) return 1.0;
    return F;
}

double unitarity_error(const Unitary2& U) {
    const Unitary2 P = U.adjoint() * U;
    double err = 0;
    err = std::max(err, abs(P.u00 - Complex{1, 0}));
    err = std::max(err, abs(P.u01));
    err = std::max(err, abs(P.u10));
    err = std::max(err, abs(P.u11 - Complex{1, 0}));
    return err;
}

}  // namespace zrot
