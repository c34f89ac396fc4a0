// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zrot/analysis.hpp"
#include "zrot/catalog.hpp"
#include "zrot/grouping.hpp"
#include "zrot/scan.hpp"
#include "zrot/su2.hpp"
#include "zrot/toggling.hpp"

using namespace zrot;

namespace {

constexpr double pi = std::numbers::pi;
const double kPaperPhis[] = {pi, pi / 2, pi / 4};

double sq(double x) { return x * x; }
double s2(double P) { return sq(std::sin(P / 4)); }
double c2(double P) { return sq(std::cos(P / 4)); }

// Collects failure messages for one criterion.
struct Check {
    std::vector<std::string> fails;
    int count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok) fails.push_back(what);
    }
    void rel(double got, double want, double tol, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, " got %.6g want %.6g", got, want);
        expect(std::abs(got / want - 1) <= tol, what + buf);
    }
};

std::string phi_name(double P) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "Phi=%.4f", P);
    return buf;
}

// Orders on both axes and coefficients within rel of the closed forms.
void expect_expansion(Check& c, const PulseSequence& s, int pse_order, double pse_coeff, int ore_order,
                      double ore_coeff, double rel) {
    const std::string tag = s.label() + " " + phi_name(s.target_phi());
    try {
        const OrderEstimate p = infidelity_order(s, Axis::Pse);
        const OrderEstimate o = infidelity_order(s, Axis::Ore);
        c.expect(p.rounded_order == pse_order && p.integral, tag + " pse order " + std::to_string(p.exponent));
        c.expect(o.rounded_order == ore_order && o.integral, tag + " ore order " + std::to_string(o.exponent));
        c.rel(p.coefficient, pse_coeff, rel, tag + " pse coefficient");
        c.rel(o.coefficient, ore_coeff, rel, tag + " ore coefficient");
    } catch (const std::exception& e) {
        c.expect(false, tag + ": " + e.what());
    }
}

// ---- independent oracles ----

using cd = std::complex<double>;
using M2 = std::array<cd, 4>;

M2 mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

M2 series_rotation(double theta, double phase, double eps, double f) {
    const cd I(0, 1);
    const double a = 1 + eps;
    const M2 H{f, a * std::exp(-I * phase), a * std::exp(I * phase), -f};
    M2 A;
    for (int i = 0; i < 4; ++i) A[i] = -I * theta / 2.0 * H[i];
    M2 sum{1, 0, 0, 1}, term{1, 0, 0, 1};
    for (int k = 1; k <= 60; ++k) {
        term = mul(term, A);
        for (cd& t : term) t /= double(k);
        for (int i = 0; i < 4; ++i) sum[i] += term[i];
    }
    return sum;
}

std::vector<double> antisym_toggling(double a, double b, double P) { return {a, b, -a + b + P / 4, a - b - P / 4, -b, -a}; }

std::array<double, 2> antisym_residual(double a, double b, double P) {
    const auto t = antisym_toggling(a, b, P);
    double c = 0, s = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        c += std::cos(t[j]);
        for (std::size_t k = 0; k < j; ++k) s += std::sin(t[j] - t[k]);
    }
    return {c, s};
}

std::vector<std::array<double, 2>> antisym_roots(double P) {
    std::vector<std::array<double, 2>> roots;
    for (int i = 0; i < 16; ++i)
        for (int k = 0; k < 16; ++k) {
            double a = -pi + 2 * pi * (i + 0.5) / 16, b = -pi + 2 * pi * (k + 0.5) / 16;
            for (int it = 0; it < 60; ++it) {
                const auto r = antisym_residual(a, b, P);
                const double h = 1e-7;
                const auto ra = antisym_residual(a + h, b, P), rma = antisym_residual(a - h, b, P);
                const auto rb = antisym_residual(a, b + h, P), rmb = antisym_residual(a, b - h, P);
                const double J00 = (ra[0] - rma[0]) / (2 * h), J01 = (rb[0] - rmb[0]) / (2 * h);
                const double J10 = (ra[1] - rma[1]) / (2 * h), J11 = (rb[1] - rmb[1]) / (2 * h);
                const double det = J00 * J11 - J01 * J10;
                if (std::abs(det) < 1e-14) break;
                const double da = (J11 * r[0] - J01 * r[1]) / det, db = (J00 * r[1] - J10 * r[0]) / det;
                a -= da;
                b -= db;
                if (std::abs(da) + std::abs(db) < 1e-15) break;
            }
            const auto r = antisym_residual(a, b, P);
            if (std::abs(r[0]) + std::abs(r[1]) < 1e-13) roots.push_back({a, b});
        }
    return roots;
}

// ---- criteria ----

void ac01(Check& c) {
    for (double P : {pi, pi / 2, pi / 4, 0.3})
        for (const FamilyInfo& f : family_table())
            for (int branch : {+1, -1}) {
                BuildParams bp{branch, {}};
                if (f.needs_params) bp.general = GeneralFamilyParams{10, 0.2, 1, 0, 1};
                try {
                    const PulseSequence s = build(f.id, P, bp);
                    c.expect(sequence_fidelity(s, {0, 0}) >= 1 - 1e-12, std::string(f.name) + " " + phi_name(P));
                } catch (const UnsupportedError&) {
                    c.expect(f.id == FamilyId::ichikawa_short || f.id == FamilyId::ichikawa_nested,
                             std::string(f.name) + " unsupported at " + phi_name(P));
                } catch (const std::exception& e) {
                    c.expect(false, std::string(f.name) + ": " + e.what());
                }
            }
}

void ac02(Check& c) {
    for (double P : kPaperPhis) expect_expansion(c, build(FamilyId::baseline, P), 2, c2(P) * pi * pi / 2, 2, 2 * s2(P), 0.01);
}

void ac03(Check& c) {
    for (double P : kPaperPhis) {
        expect_expansion(c, build(FamilyId::s4_111, P), 4, s2(P) * std::pow(pi, 4) / 8, 4, 2 * s2(P), 0.01);
        expect_expansion(c, build(FamilyId::s4_112, P), 4, c2(P) * std::pow(pi, 4) / 8, 4, 2 * c2(P), 0.01);
    }
}

void ac04(Check& c) {
    for (double P : kPaperPhis) {
        const double pse = c2(P) * std::pow(pi, 6) / 32;
        for (FamilyId id : {FamilyId::s6_201, FamilyId::s6_202, FamilyId::s6_203, FamilyId::s6_204}) {
            const PulseSequence s = build(id, P);
            const OrderEstimate e = infidelity_order(s, Axis::Pse);
            c.expect(e.rounded_order == 6 && e.integral, s.label() + " " + phi_name(P) + " pse order");
            c.rel(e.coefficient, pse, 0.01, s.label() + " " + phi_name(P) + " pse coefficient");
        }
        c.rel(infidelity_order(build(FamilyId::s6_201, P), Axis::Ore).coefficient, 8 * s2(P), 0.01,
              "s6_201 " + phi_name(P) + " ore coefficient");
        c.rel(infidelity_order(build(FamilyId::s6_202, P), Axis::Ore).coefficient, 2, 0.01,
              "s6_202 " + phi_name(P) + " ore coefficient");
    }
}

void ac05(Check& c) {
    for (double P : kPaperPhis) {
        expect_expansion(c, build(FamilyId::s6_221, P), 6, c2(P) * std::pow(pi, 6) / 32, 6, 2 * s2(P), 0.01);
        expect_expansion(c, build(FamilyId::s6_222, P), 6, s2(P) * std::pow(pi, 6) / 32, 6, 2 * c2(P), 0.01);
    }
}

void ac06(Check& c) {
    for (double P : kPaperPhis) {
        expect_expansion(c, build(FamilyId::s8_331, P), 8, s2(P) * std::pow(pi, 8) / 128, 8, 2 * s2(P), 0.02);
        expect_expansion(c, build(FamilyId::s8_332, P), 8, c2(P) * std::pow(pi, 8) / 128, 8, 2 * c2(P), 0.02);
    }
}

void ac07(Check& c) {
    for (int n : {10, 12})
        for (double P : kPaperPhis)
            for (int j1 : {0, 1}) {
                const PulseSequence s = general_family({n, 0, j1, 0, 1}, P);
                const double sg = j1 % 2 ? -1 : 1;  // (-1)^(j1 - j2)
                const double pse_bracket = n % 4 == 2 ? 1 + sg * std::cos(P / 2) : 1 - sg * std::cos(P / 2);
                const double pse = pse_bracket * std::pow(pi / 2, n);
                const double ore = 1 - sg * std::cos(P / 2);
                expect_expansion(c, s, n, pse, n, ore, 0.05);
                c.expect(std::abs(time_cost(s) - n) < 1e-12, "T != n for n=" + std::to_string(n));
            }
}

void ac08(Check& c) {
    for (double P : kPaperPhis) {
        const auto roots = antisym_roots(P);
        c.expect(!roots.empty(), "oracle found no roots at " + phi_name(P));
        for (int branch : {+1, -1}) {
            const double a = antisym_alpha(P, branch);
            const double b = 2 * a - P / 4;
            const ConditionReport r = check_conditions(TogglingPhases(antisym_toggling(a, b, P)), P);
            const std::string tag = phi_name(P) + " branch " + std::to_string(branch);
            c.expect(r.pse1 <= 1e-9 && r.pse2 <= 1e-9, tag + " residuals");
            const auto ar = antisym_residual(a, b, P);
            c.expect(std::abs(ar[0]) <= 1e-9 && std::abs(ar[1]) <= 1e-9, tag + " direct residuals");
            double best = 1e9;
            for (const auto& root : roots)
                best = std::min(best, std::hypot(std::remainder(root[0] - a, 2 * pi), std::remainder(root[1] - b, 2 * pi)));
            c.expect(best <= 1e-8, tag + " oracle distance " + std::to_string(best));
            // the built sequence realises the same conditions
            const PulseSequence s = build(branch > 0 ? FamilyId::s6_203 : FamilyId::s6_204, P);
            const ConditionReport rs = check_conditions(to_toggling(PhaseList(s.phases())), P);
            c.expect(rs.closure_ok() && rs.pse2 <= 1e-9, tag + " built sequence");
        }
    }
}

void ac09(Check& c) {
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> u(-1, 1);
    for (double P : kPaperPhis) {
        const PulseSequence scro = build(FamilyId::scrofulous, P), tri = build(FamilyId::s6_201, P);
        double worst = 0;
        for (int k = 0; k < 25; ++k) {
            const ErrorPoint e{u(rng), u(rng)};
            worst = std::max(worst, std::abs(sequence_fidelity(scro, e) - sequence_fidelity(tri, e)));
        }
        c.expect(worst <= 1e-6, "scrofulous vs s6_201 " + phi_name(P) + " diff " + std::to_string(worst));

        const OrderEstimate sk = infidelity_order(build(FamilyId::sk1, P), Axis::Pse);
        const OrderEstimate bb = infidelity_order(build(FamilyId::bb1, P), Axis::Pse);
        const OrderEstimate tr = infidelity_order(tri, Axis::Pse);
        c.expect(sk.rounded_order == 6, "sk1 pse order " + phi_name(P));
        c.expect(bb.rounded_order == 6, "bb1 pse order " + phi_name(P));
        c.expect(sk.coefficient > tr.coefficient, "sk1 not worse than s6_201 " + phi_name(P));
    }
    const OrderEstimate ich = infidelity_order(build(FamilyId::ichikawa_short, pi), Axis::Pse);
    c.expect(ich.rounded_order == 4, "ichikawa_short pse order");
    c.rel(ich.coefficient, 8.24, 0.02, "ichikawa_short pse coefficient");
}

void ac10(Check& c) {
    const double F = sequence_fidelity(build(FamilyId::baseline, pi / 4), {-1, -0.87});
    c.expect(F > 0.999, "baseline figure point F=" + std::to_string(F));
}

void ac11(Check& c) {
    using K = Shape::Kind;
    for (double P : {pi, pi / 2, pi / 4, 0.3})
        for (int o : {1, -1}) {
            const GroupingSpec arrow{4, {{K::Pair, {1, 2}, o, 0.3}, {K::Pair, {3, 4}, 1, {}}}, 0};
            c.expect(std::holds_alternative<Infeasible>(grouped_polygon_sequence(arrow, P)), "arrowhead closes");
        }

    struct Tri {
        std::array<int, 3> a, b;
        int order;
    };
    const Tri tris[] = {
        {{1, 2, 3}, {4, 5, 6}, 6}, {{2, 3, 4}, {1, 5, 6}, 6}, {{3, 4, 5}, {1, 2, 6}, 6},  // (a)
        {{1, 2, 5}, {3, 4, 6}, 4}, {{2, 3, 6}, {1, 4, 5}, 4}, {{1, 3, 4}, {2, 5, 6}, 4},  // (b)
        {{1, 3, 6}, {2, 4, 5}, 4}, {{1, 2, 4}, {3, 5, 6}, 4}, {{1, 4, 6}, {2, 3, 5}, 4},
        {{1, 3, 5}, {2, 4, 6}, 6},  // (c)
    };
    for (double P : kPaperPhis)
        for (const Tri& t : tris) {
            const GroupingSpec spec{6,
                                    {{K::Triangle, {t.a[0], t.a[1], t.a[2]}, 1, {}},
                                     {K::Triangle, {t.b[0], t.b[1], t.b[2]}, -1, 0.9}},
                                    0};
            const auto r = grouped_polygon_sequence(spec, P);
            const std::string tag = "triangles " + std::to_string(t.a[0]) + std::to_string(t.a[1]) +
                                    std::to_string(t.a[2]) + " " + phi_name(P);
            if (!std::holds_alternative<PulseSequence>(r)) {
                c.expect(false, tag + " infeasible");
                continue;
            }
            c.expect(infidelity_order(std::get<PulseSequence>(r), Axis::Pse).rounded_order == t.order, tag + " order");
        }

    const std::array<std::array<int, 6>, 6> pairs = {{{1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 1, 6}, {1, 4, 2, 5, 3, 6},
                                                       {1, 2, 3, 6, 4, 5}, {2, 3, 5, 6, 1, 4}, {2, 5, 3, 4, 1, 6}}};
    for (double P : {pi, pi / 2, pi / 4, 0.3})
        for (const auto& g : pairs) {
            const GroupingSpec spec{6,
                                    {{K::Pair, {g[0], g[1]}, 1, 0.2},
                                     {K::Pair, {g[2], g[3]}, -1, 1.1},
                                     {K::Pair, {g[4], g[5]}, 1, {}}},
                                    0};
            c.expect(std::holds_alternative<Infeasible>(grouped_polygon_sequence(spec, P)),
                     "balanced pairs close at " + phi_name(P));
        }
}

void ac12(Check& c) {
    std::mt19937_64 rng(1212);
    std::uniform_real_distribution<double> ang(-2 * pi, 2 * pi), u(-1, 1), theta(0, 2 * pi);
    std::uniform_int_distribution<int> half(1, 8);

    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
        std::vector<double> lab(2 * half(rng));
        for (double& x : lab) x = ang(rng);
        const auto back = from_toggling(to_toggling(PhaseList(lab))).values();
        for (std::size_t k = 0; k < lab.size(); ++k) worst = std::max(worst, std::abs(back[k] - lab[k]));
    }
    c.expect(worst <= 1e-12, "toggling round trip " + std::to_string(worst));

    std::vector<FamilyId> ids;
    for (const FamilyInfo& f : family_table())
        if (!f.needs_params) ids.push_back(f.id);
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    worst = 0;
    for (int t = 0; t < 1000; ++t) {
        const FamilyId id = ids[pick(rng)];
        const double P = id == FamilyId::ichikawa_short || id == FamilyId::ichikawa_nested ? pi : ang(rng) / 2;
        const PulseSequence s = build(id, P);
        const ErrorPoint e{u(rng), u(rng)};
        worst = std::max(worst, std::abs(sequence_fidelity(offset_phases(s, ang(rng)), e) - sequence_fidelity(s, e)));
    }
    c.expect(worst <= 1e-12, "offset invariance " + std::to_string(worst));

    worst = 0;
    for (int t = 0; t < 1000; ++t) {
        const double th = theta(rng), ph = ang(rng), e = u(rng), f = u(rng);
        const Unitary2 U = perturbed_rotation(th, ph, e, f);
        const M2 R = series_rotation(th, ph, e, f);
        const std::array<cd, 4> got = {cd(U.u00.re, U.u00.im), cd(U.u01.re, U.u01.im), cd(U.u10.re, U.u10.im),
                                       cd(U.u11.re, U.u11.im)};
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(got[i] - R[i]));
    }
    c.expect(worst <= 1e-10, "rotation vs series oracle " + std::to_string(worst));

    const PulseSequence s = build(FamilyId::s8_331, pi / 4);
    const GridScan ref = scan_grid_serial(s, {}, {}, 201, 201);
    for (int threads : {1, 2, 4, 8}) {
        const GridScan g = scan_grid(s, {}, {}, 201, 201, threads);
        c.expect(g.fidelity.size() == ref.fidelity.size() &&
                     std::memcmp(g.fidelity.data(), ref.fidelity.data(), ref.fidelity.size() * sizeof(double)) == 0,
                 "grid differs at threads=" + std::to_string(threads));
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<void(Check&)> run;
    };
    const Criterion all[] = {
        {"AC-01", "gate closure for every family", ac01},
        {"AC-02", "baseline expansions", ac02},
        {"AC-03", "four-pulse families", ac03},
        {"AC-04", "six-pulse strength-only families", ac04},
        {"AC-05", "six-pulse simultaneous families", ac05},
        {"AC-06", "eight-pulse families", ac06},
        {"AC-07", "general families n=10,12", ac07},
        {"AC-08", "antisymmetric closed form", ac08},
        {"AC-09", "reference sequences", ac09},
        {"AC-10", "figure spot-check", ac10},
        {"AC-11", "infeasible and structural groupings", ac11},
        {"AC-12", "property suites and grid determinism", ac12},
    };
    int failed = 0;
    for (const Criterion& cr : all) {
        Check c;
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.fails.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.fails.empty();
        failed += !ok;
        std::printf("[%s] %s %s (%d checks)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, c.count);
        for (std::size_t k = 0; k < c.fails.size() && k < 10; ++k) std::printf("       %s\n", c.fails[k].c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(all)) - failed, std::size(all));
    return failed ? 1 : 0;
}
