#include "zrot/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zrot {

PulseSequence::PulseSequence(std::vector<Pulse> pulses, double target_phi, std::string label)
    : pulses_(std::move(pulses)), target_phi_(target_phi), label_(std::move(label)) {
    if (pulses_.empty()) throw std::invalid_argument("pulse sequence is empty");
    if (!std::isfinite(target_phi_)) throw std::invalid_argument("target angle is not finite");
    for (const Pulse& p : pulses_) {
        if (!std::isfinite(p.theta) || !std::isfinite(p.phase))
            throw std::invalid_argument("pulse angle is not finite");
        if (p.theta < 0) throw std::invalid_argument("pulse rotation angle is negative");
    }
}

std::vector<double> PulseSequence::phases() const {
    std::vector<double> out;
    out.reserve(pulses_.size());
    for (const Pulse& p : pulses_) out.push_back(p.phase);
    return out;
}

bool PulseSequence::all_pi(double tol) const {
    for (const Pulse& p : pulses_)
        if (std::abs(p.theta - std::numbers::pi) > tol) return false;
    return true;
}

double PulseSequence::closure_fidelity() const { return sequence_fidelity(*this, {0, 0}); }

bool PulseSequence::is_closed(double tol) const { return closure_fidelity() >= 1.0 - tol; }

Unitary2 propagate(const PulseSequence& seq, const ErrorPoint& err) {
    return propagate_as<double>(seq, err.epsilon, err.f);
}

double sequence_fidelity(const PulseSequence& seq, const ErrorPoint& err) {
    return fidelity(ideal_z(seq.target_phi()), propagate(seq, err));
}

double sequence_infidelity(const PulseSequence& seq, const ErrorPoint& err) {
    return infidelity(ideal_z(seq.target_phi()), propagate(seq, err));
}

double time_cost(const PulseSequence& seq) {
    double t = 0;
    for (const Pulse& p : seq.pulses()) t += std::abs(p.theta);
    return t / std::numbers::pi;
}

PulseSequence offset_phases(const PulseSequence& seq, double delta) {
    std::vector<Pulse> out = seq.pulses();
    for (Pulse& p : out) p.phase += delta;
    return PulseSequence(std::move(out), seq.target_phi(), seq.label());
}

}  // namespace zrot
