#pragma once

#include <string>
#include <vector>

#include "zrot/su2.hpp"

namespace zrot {

struct Pulse {
    double theta = 0;  // rotation angle, >= 0
    double phase = 0;  // azimuth of the in-plane axis
};

struct ErrorPoint {
    double epsilon = 0;  // pulse-strength fraction
    double f = 0;        // off-resonance fraction
};

// Pulses are stored in the order they are applied. Gate closure is a
// checkable property rather than a construction invariant so that broken
// sequences can still be represented and diagnosed.
class PulseSequence {
public:
    PulseSequence(std::vector<Pulse> pulses, double target_phi, std::string label = {});

    const std::vector<Pulse>& pulses() const { return pulses_; }
    double target_phi() const { return target_phi_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return pulses_.size(); }

    std::vector<double> phases() const;
    bool all_pi(double tol = 1e-12) const;

    double closure_fidelity() const;
    bool is_closed(double tol = 1e-12) const;

private:
    std::vector<Pulse> pulses_;
    double target_phi_;
    std::string label_;
};

Unitary2 propagate(const PulseSequence& seq, const ErrorPoint& err);

// Same product in an arbitrary real type. Angles are converted from their
// stored double values, so only the arithmetic gains precision.
template <class Real>
BasicUnitary2<Real> propagate_as(const PulseSequence& seq, const Real& epsilon, const Real& f) {
    BasicUnitary2<Real> U;
    for (const Pulse& p : seq.pulses())
        U = perturbed_rotation<Real>(Real(p.theta), Real(p.phase), epsilon, f) * U;
    return U;
}

double sequence_fidelity(const PulseSequence& seq, const ErrorPoint& err);
double sequence_infidelity(const PulseSequence& seq, const ErrorPoint& err);

// T = sum |theta| / pi
double time_cost(const PulseSequence& seq);

PulseSequence offset_phases(const PulseSequence& seq, double delta);

}  // namespace zrot
