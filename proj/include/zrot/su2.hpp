#pragma once

#include <cmath>

namespace zrot {

// Minimal complex type; templated so the order estimator can run the same
// algebra in quad precision.
template <class Real>
struct BasicComplex {
    Real re{};
    Real im{};

    friend BasicComplex operator+(const BasicComplex& a, const BasicComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BasicComplex operator-(const BasicComplex& a, const BasicComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BasicComplex operator*(const BasicComplex& a, const BasicComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BasicComplex operator*(const Real& s, const BasicComplex& a) { return {s * a.re, s * a.im}; }
    BasicComplex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
};

template <class Real>
Real abs(const BasicComplex<Real>& z) {
    using std::sqrt;
    return sqrt(z.norm2());
}

template <class Real>
struct BasicUnitary2 {
    BasicComplex<Real> u00{Real(1), Real(0)};
    BasicComplex<Real> u01{};
    BasicComplex<Real> u10{};
    BasicComplex<Real> u11{Real(1), Real(0)};

    static BasicUnitary2 identity() { return {}; }

    BasicUnitary2 adjoint() const { return {u00.conj(), u10.conj(), u01.conj(), u11.conj()}; }
    BasicComplex<Real> trace() const { return u00 + u11; }
    BasicComplex<Real> det() const { return u00 * u11 - u01 * u10; }

    friend BasicUnitary2 operator*(const BasicUnitary2& a, const BasicUnitary2& b) {
        return {a.u00 * b.u00 + a.u01 * b.u10, a.u00 * b.u01 + a.u01 * b.u11,
                a.u10 * b.u00 + a.u11 * b.u10, a.u10 * b.u01 + a.u11 * b.u11};
    }
};

using Complex = BasicComplex<double>;
using Unitary2 = BasicUnitary2<double>;

// (theta)_phase = exp(-i theta sigma_phase / 2)
Unitary2 rotation(double theta, double phase);

// exp[-i theta ((1+eps) sigma_phase + f sigma_z) / 2]; the in-plane axis is
// passed as (cos phase, sin phase) so callers can hoist the trig.
template <class Real>
BasicUnitary2<Real> perturbed_rotation_cs(const Real& theta, const Real& cphi, const Real& sphi,
                                          const Real& epsilon, const Real& f) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    const Real a = Real(1) + epsilon;
    const Real omega = sqrt(a * a + f * f);
    if (omega == Real(0)) return BasicUnitary2<Real>::identity();
    const Real half = theta * omega / Real(2);
    const Real c = cos(half);
    const Real s = sin(half) / omega;
    const Real nx = a * cphi;
    const Real ny = a * sphi;
    // c I - i s (nx sx + ny sy + f sz)
    return {{c, -s * f}, {-s * ny, -s * nx}, {s * ny, -s * nx}, {c, s * f}};
}

template <class Real>
BasicUnitary2<Real> perturbed_rotation(const Real& theta, const Real& phase, const Real& epsilon,
                                       const Real& f) {
    using std::cos;
    using std::sin;
    return perturbed_rotation_cs<Real>(theta, cos(phase), sin(phase), epsilon, f);
}

Unitary2 perturbed_rotation(double theta, double phase, double epsilon, double f);

// diag(e^{-i Phi/2}, e^{i Phi/2})
Unitary2 ideal_z(double Phi);

// |tr(U^dagger V)| / 2
double fidelity(const Unitary2& U, const Unitary2& V);

// 1 - |tr(U^dagger V)|/2 evaluated without the subtraction, so it stays
// accurate far below machine epsilon.
template <class Real>
Real infidelity(const BasicUnitary2<Real>& U, const BasicUnitary2<Real>& V) {
    const BasicUnitary2<Real> W = U.adjoint() * V;
    const Real F = abs(W.trace()) / Real(2);
    const Real num = (W.u00 - W.u11).norm2() + Real(2) * W.u01.norm2() + Real(2) * W.u10.norm2();
    return num / (Real(4) * (Real(1) + F));
}

// max entrywise |U^dagger U - I|
double unitarity_error(const Unitary2& U);

}  // namespace zrot
