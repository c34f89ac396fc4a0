#pragma once

#include <array>
#include <vector>

namespace zrot {

// Lab-frame phases of a pi-pulse train. Even length, finite.
class PhaseList {
public:
    explicit PhaseList(std::vector<double> values);
    const std::vector<double>& values() const { return v_; }
    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }

private:
    std::vector<double> v_;
};

// Toggling-frame phases phi'_j. Even length, finite.
class TogglingPhases {
public:
    explicit TogglingPhases(std::vector<double> values);
    const std::vector<double>& values() const { return v_; }
    std::size_t size() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }

private:
    std::vector<double> v_;
};

TogglingPhases to_toggling(const PhaseList& phases);
PhaseList from_toggling(const TogglingPhases& toggling);

// phi''_j = phi'_j + sign * (-1)^(j+1) pi/2, j from 1; sign = -1 undoes sign = +1
TogglingPhases modified_phases(const TogglingPhases& toggling, int sign = +1);

struct ConditionReport {
    double closure = 0;  // circular distance of 2*sum(phi'_even - phi'_odd) from -Phi
    double pse1 = 0;     // max(|sum cos phi'|, |sum sin phi'|)
    double pse2 = 0;     // |sum_j sum_{k<j} sin(phi'_j - phi'_k)|
    double ore1 = 0;     // as pse1 on phi''
    double ore2 = 0;     // as pse2 on phi''
    double tol = 1e-9;

    bool closure_ok() const { return closure <= tol; }
    // highest order (0..2) whose conditions all hold
    int pse_order() const;
    int ore_order() const;
    std::array<double, 5> residuals() const { return {closure, pse1, pse2, ore1, ore2}; }
};

ConditionReport check_conditions(const TogglingPhases& toggling, double Phi, double tol = 1e-9);

// distance between two angles on the circle, in [0, pi]
double circular_distance(double a, double b);

}  // namespace zrot
