#include "zrot/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "zrot/toggling.hpp"

namespace zrot {

namespace {

constexpr double pi = std::numbers::pi;

const std::vector<FamilyInfo> kFamilies = {
    {FamilyId::baseline, "baseline", 2, 0, 0, "two pulses, no correction", false},
    {FamilyId::s4_111, "s4_111", 4, 1, 1, "rhombus, antisymmetric lab phases", false},
    {FamilyId::s4_112, "s4_112", 4, 1, 1, "rhombus, target shifted by -2pi", false},
    {FamilyId::s6_201, "s6_201", 6, 2, 0, "two triangles on adjacent indices", false},
    {FamilyId::s6_202, "s6_202", 6, 2, 0, "three antiparallel pairs (13)(25)(46)", false},
    {FamilyId::s6_203, "s6_203", 6, 2, 0, "antisymmetric closed form, upper branch", false},
    {FamilyId::s6_204, "s6_204", 6, 2, 0, "antisymmetric closed form, lower branch", false},
    {FamilyId::s6_221, "s6_221", 6, 2, 2, "interleaved triangles", false},
    {FamilyId::s6_222, "s6_222", 6, 2, 2, "interleaved triangles, target shifted by 2pi", false},
    {FamilyId::s8_331, "s8_331", 8, 3, 3, "interleaved squares", false},
    {FamilyId::s8_332, "s8_332", 8, 3, 3, "interleaved squares, odd relative offset", false},
    {FamilyId::general, "general", 0, -1, -1, "interleaved regular polygons, any even n >= 6", true},
    {FamilyId::scrofulous, "scrofulous", 6, 2, 0, "reference: SCROFULOUS pair", false},
    {FamilyId::sk1, "sk1", 6, 2, 0, "reference: SK1 pair", false},
    {FamilyId::bb1, "bb1", 8, 2, 0, "reference: BB1 pair", false},
    {FamilyId::ichikawa_short, "ichikawa_short", 4, 1, 0, "reference: four-pulse Ichikawa gate, Phi = pi", false},
    {FamilyId::ichikawa_nested, "ichikawa_nested", 8, 1, 1, "reference: nested Ichikawa gate, Phi = pi", false},
};

std::vector<Pulse> pis(std::initializer_list<double> phases) {
    std::vector<Pulse> out;
    for (double p : phases) out.push_back({pi, p});
    return out;
}

// Reference sequences are printed as matrix products. Try the right-to-left
// reading first and fall back to left-to-right only if that fails to close.
PulseSequence resolve_product(std::vector<Pulse> as_written, double Phi, const std::string& label) {
    std::vector<Pulse> rtl(as_written.rbegin(), as_written.rend());
    PulseSequence a(rtl, Phi, label);
    if (a.is_closed()) return a;
    PulseSequence b(std::move(as_written), Phi, label);
    if (b.is_closed()) return b;
    throw std::logic_error(label + ": neither product order closes the gate");
}

// First-order strength-error generator G of a sequence: U(eps) = U(0)(I - i eps G + ...).
std::array<double, 3> pse_generator(const std::vector<Pulse>& applied) {
    Unitary2 P;
    Unitary2 G{{0, 0}, {0, 0}, {0, 0}, {0, 0}};
    for (const Pulse& p : applied) {
        P = rotation(p.theta, p.phase) * P;
        const Unitary2 sig{{0, 0}, {std::cos(p.phase), -std::sin(p.phase)},
                           {std::cos(p.phase), std::sin(p.phase)}, {0, 0}};
        const Unitary2 term = P.adjoint() * sig * P;
        const double w = p.theta / 2;
        G.u00 = G.u00 + w * term.u00;
        G.u01 = G.u01 + w * term.u01;
    }
    return {G.u00.re, G.u01.re, G.u01.im};
}

std::vector<Pulse> ichikawa_short_written(double a, double b) {
    return {{pi, 0}, {2 * pi, a}, {2 * pi, b}, {pi, -pi / 2}};
}

std::pair<double, double> refine_ichikawa() {
    double x[2] = {3.566, 1.147};
    auto resid = [](double a, double b) {
        auto w = ichikawa_short_written(a, b);
        std::reverse(w.begin(), w.end());
        return pse_generator(w);
    };
    for (int it = 0; it < 50; ++it) {
        const auto r = resid(x[0], x[1]);
        const double h = 1e-7;
        double J[3][2];
        for (int c = 0; c < 2; ++c) {
            double xp[2] = {x[0], x[1]}, xm[2] = {x[0], x[1]};
            xp[c] += h;
            xm[c] -= h;
            const auto rp = resid(xp[0], xp[1]);
            const auto rm = resid(xm[0], xm[1]);
            for (int k = 0; k < 3; ++k) J[k][c] = (rp[k] - rm[k]) / (2 * h);
        }
        double A[2][2] = {{0, 0}, {0, 0}}, g[2] = {0, 0};
        for (int k = 0; k < 3; ++k)
            for (int c = 0; c < 2; ++c) {
                g[c] += J[k][c] * r[k];
                for (int d = 0; d < 2; ++d) A[c][d] += J[k][c] * J[k][d];
            }
        const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
        if (det == 0) break;
        const double dx0 = (A[1][1] * g[0] - A[0][1] * g[1]) / det;
        const double dx1 = (A[0][0] * g[1] - A[1][0] * g[0]) / det;
        x[0] -= dx0;
        x[1] -= dx1;
        if (std::abs(dx0) + std::abs(dx1) < 1e-15) break;
    }
    return {x[0], x[1]};
}

void require_phi_pi(FamilyId id, double Phi) {
    if (std::abs(Phi - pi) > 1e-12)
        throw UnsupportedError(std::string(to_string(id)) + " is only defined for Phi = pi");
}

}  // namespace

const std::vector<FamilyInfo>& family_table() { return kFamilies; }

const FamilyInfo& family_info(FamilyId id) {
    for (const FamilyInfo& f : kFamilies)
        if (f.id == id) return f;
    throw std::logic_error("unknown family id");
}

std::string_view to_string(FamilyId id) { return family_info(id).name; }

FamilyId parse_family(std::string_view name) {
    for (const FamilyInfo& f : kFamilies)
        if (f.name == name) return f.id;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

const std::vector<CccpEntry>& cccp_constants() {
    static const std::vector<CccpEntry> v = {
        {"reduced CinSK", 16.7}, {"reduced CinBB", 16.7}, {"reduced SKinsC", 12.7}};
    return v;
}

std::pair<double, double> ichikawa_phases() {
    static const std::pair<double, double> refined = refine_ichikawa();
    return refined;
}

double antisym_alpha(double Phi, int branch) {
    const double s = branch >= 0 ? 1.0 : -1.0;
    const double c8 = std::cos(Phi / 8);
    const double r = std::cbrt(std::cos(Phi / 4));
    const double t = c8 * c8 + r + r * r;
    if (!(t > 0)) throw std::domain_error("antisym_alpha: t_Phi is not positive");
    const double inner = -t + 3 * c8 * c8 + std::sin(Phi / 8) * std::sin(Phi / 4) / std::sqrt(t);
    if (inner < 0) throw std::domain_error("antisym_alpha: negative radicand");
    const double arg = 0.5 * (-c8 + std::sqrt(t) + s * std::sqrt(inner));
    if (!(arg >= -1.0 && arg <= 1.0))
        throw std::domain_error("antisym_alpha: arccos argument " + std::to_string(arg) + " outside [-1, 1]");
    return Phi / 8 + s * std::acos(arg);
}

void validate(const GeneralFamilyParams& p) {
    if (p.n < 6 || p.n % 2 != 0)
        throw std::invalid_argument("general family needs an even pulse count n >= 6");
    if (!std::isfinite(p.alpha)) throw std::invalid_argument("general family alpha is not finite");
    if (p.orientation != 1 && p.orientation != -1)
        throw std::invalid_argument("general family orientation must be +1 or -1");
}

PulseSequence general_family(const GeneralFamilyParams& p, double Phi) {
    validate(p);
    const int m = p.n / 2;
    double step, unit;
    if (p.n % 4 == 2) {
        const int k = (p.n - 2) / 4;
        step = 2 * pi / (2 * k + 1);
        unit = pi / (2 * k + 1);
    } else {
        const int k = p.n / 4;
        step = pi / k;
        unit = pi / (2 * k);
    }
    const double s = p.orientation;
    std::vector<double> tog(p.n);
    for (int i = 0; i < m; ++i) {
        tog[2 * i] = p.alpha + s * i * step + p.j1 * unit;
        tog[2 * i + 1] = p.alpha - Phi / p.n - s * i * step + p.j2 * unit;
    }
    const PhaseList lab = from_toggling(TogglingPhases(std::move(tog)));
    std::vector<Pulse> pulses;
    for (double ph : lab.values()) pulses.push_back({pi, ph});
    const std::string label = "general(n=" + std::to_string(p.n) + ",j1=" + std::to_string(p.j1) +
                              ",j2=" + std::to_string(p.j2) + ")";
    return PulseSequence(std::move(pulses), Phi, label);
}

PulseSequence build(FamilyId family, double Phi, const BuildParams& params) {
    if (!std::isfinite(Phi)) throw std::invalid_argument("target angle is not finite");
    const double s = params.branch >= 0 ? 1.0 : -1.0;
    const double P = Phi;
    const std::string label(to_string(family));
    std::optional<PulseSequence> out;

    switch (family) {
    case FamilyId::baseline:
        out.emplace(pis({-P / 2, 0}), P, label);
        break;
    case FamilyId::s4_111:
        out.emplace(pis({(-3 * P + 4 * pi) / 8, (-P + 4 * pi) / 8, (P + 12 * pi) / 8, (3 * P + 12 * pi) / 8}), P,
                    label);
        break;
    case FamilyId::s4_112:
        out.emplace(pis({(-3 * P - 10 * pi) / 8, (-P - 6 * pi) / 8, (P + 6 * pi) / 8, (3 * P + 10 * pi) / 8}), P,
                    label);
        break;
    case FamilyId::s6_201:
        out.emplace(pis({(-3 * P + s * 4 * pi) / 6, (-3 * P + s * 8 * pi) / 6, (-3 * P + s * 4 * pi) / 6,
                         s * 4 * pi / 6, s * 8 * pi / 6, s * 4 * pi / 6}),
                    P, label);
        break;
    case FamilyId::s6_202:
        out.emplace(pis({pi / 4, pi / 2 + P / 8, -pi / 4 + P / 4, pi / 4 + P / 2, pi / 2 + 5 * P / 8,
                         -pi / 4 + 3 * P / 4}),
                    P, label);
        break;
    case FamilyId::s6_203:
    case FamilyId::s6_204: {
        const double a = antisym_alpha(P, family == FamilyId::s6_203 ? +1 : -1);
        const double b = 2 * a - P / 4;
        out.emplace(pis({a - P / 2, 2 * a - b - P / 2, a - b - P / 4, -a + b + P / 4, -2 * a + b + P / 2,
                         -a + P / 2}),
                    P, label);
        break;
    }
    case FamilyId::s6_221:
        out.emplace(pis({0, P / 6 + s * 2 * pi / 3, P / 3, P / 2, 2 * P / 3 + s * 2 * pi / 3, 5 * P / 6}), P,
                    label);
        break;
    case FamilyId::s6_222:
        out.emplace(pis({0, P / 6 + s * pi, P / 3 + s * 2 * pi / 3, P / 2 + s * pi, 2 * P / 3,
                         5 * P / 6 - s * pi / 3}),
                    P, label);
        break;
    case FamilyId::s8_331:
        out.emplace(pis({0, P / 8 - s * pi / 2, P / 4 - s * pi / 2, 3 * P / 8, s * pi + P / 2,
                         5 * P / 8 + s * pi / 2, 3 * P / 4 + s * pi / 2, 7 * P / 8 + s * pi}),
                    P, label);
        break;
    case FamilyId::s8_332:
        out.emplace(pis({0, P / 8 - s * pi / 4, P / 4, 3 * P / 8 + s * 3 * pi / 4, P / 2,
                         5 * P / 8 + s * 7 * pi / 4, 3 * P / 4, 7 * P / 8 + s * 11 * pi / 4}),
                    P, label);
        break;
    case FamilyId::general:
        if (!params.general) throw std::invalid_argument("general family requires parameters (n, j1, j2, alpha)");
        out.emplace(general_family(*params.general, P));
        break;
    case FamilyId::scrofulous:
        out.emplace(resolve_product(pis({pi / 3, 5 * pi / 3, pi / 3, pi / 3 - P / 2, 5 * pi / 3 - P / 2,
                                         pi / 3 - P / 2}),
                                    P, label));
        break;
    case FamilyId::sk1: {
        const double v = std::acos(-0.25);
        out.emplace(resolve_product(
            {{2 * pi, v}, {2 * pi, -v}, {pi, 0}, {2 * pi, v - P / 2}, {2 * pi, -v - P / 2}, {pi, -P / 2}}, P,
            label));
        break;
    }
    case FamilyId::bb1: {
        const double v = std::acos(-0.25);
        out.emplace(resolve_product({{pi, v},
                                     {2 * pi, 3 * v},
                                     {pi, v},
                                     {pi, 0},
                                     {pi, v - P / 2},
                                     {2 * pi, 3 * v - P / 2},
                                     {pi, v - P / 2},
                                     {pi, -P / 2}},
                                    P, label));
        break;
    }
    case FamilyId::ichikawa_short: {
        require_phi_pi(family, P);
        const auto [a, b] = ichikawa_phases();
        out.emplace(resolve_product(ichikawa_short_written(a, b), P, label));
        break;
    }
    case FamilyId::ichikawa_nested: {
        require_phi_pi(family, P);
        const auto [a, b] = ichikawa_phases();
        out.emplace(resolve_product({{pi / 3, 0},
                                     {5 * pi / 3, pi},
                                     {7 * pi / 3, 0},
                                     {2 * pi, a},
                                     {2 * pi, b},
                                     {pi / 3, -pi / 2},
                                     {5 * pi / 3, -3 * pi / 2},
                                     {7 * pi / 3, -pi / 2}},
                                    P, label));
        break;
    }
    }
    if (!out->is_closed())
        throw std::logic_error(label + ": constructed sequence does not close (fidelity " +
                               std::to_string(out->closure_fidelity()) + ")");
    return *out;
}

}  // namespace zrot
