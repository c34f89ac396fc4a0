#include "zrot/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include <boost/multiprecision/float128.hpp>

namespace zrot {

namespace {

using quad = boost::multiprecision::float128;

// Sequence angles hoisted into quad precision once; each sample then only
// pays for sqrt/sin/cos of the rescaled rotation angle.
class QuadSampler {
public:
    QuadSampler(const PulseSequence& seq, Axis axis) : axis_(axis) {
        for (const Pulse& p : seq.pulses()) {
            const quad ph(p.phase);
            terms_.push_back({quad(p.theta), cos(ph), sin(ph)});
        }
        reference_ = product(quad(0), quad(0));
    }

    double operator()(double x) const {
        const quad q(x);
        const auto U = axis_ == Axis::Pse ? product(q, quad(0)) : product(quad(0), q);
        return static_cast<double>(infidelity<quad>(reference_, U));
    }

private:
    struct Term {
        quad theta, c, s;
    };

    BasicUnitary2<quad> product(const quad& eps, const quad& f) const {
        BasicUnitary2<quad> U;
        for (const Term& t : terms_) U = perturbed_rotation_cs<quad>(t.theta, t.c, t.s, eps, f) * U;
        return U;
    }

    Axis axis_;
    std::vector<Term> terms_;
    BasicUnitary2<quad> reference_;
};

}  // namespace

std::string_view to_string(Axis a) { return a == Axis::Pse ? "pse" : "ore"; }

Axis parse_axis(std::string_view s) {
    std::string t(s);
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "pse") return Axis::Pse;
    if (t == "ore") return Axis::Ore;
    throw std::invalid_argument("axis must be 'pse' or 'ore'");
}

double extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("extrapolate_to_zero: bad input");
    std::vector<double> T = ys;
    const std::size_t n = xs.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i)
            T[i] = (xs[i + k] * T[i] - xs[i] * T[i + 1]) / (xs[i + k] - xs[i]);
    return T[0];
}

double axis_infidelity(const PulseSequence& seq, Axis axis, double x) { return QuadSampler(seq, axis)(x); }

OrderEstimate infidelity_order(const PulseSequence& seq, Axis axis, const OrderOptions& opt) {
    if (opt.points < 3 || opt.slope_levels < 1 || opt.slope_levels > opt.points - 1 || opt.coeff_levels < 1 ||
        opt.coeff_levels > opt.points || !(opt.span > 1) || !(opt.floor > 0))
        throw std::invalid_argument("infidelity_order: inconsistent options");
    const QuadSampler I(seq, axis);

    double hi = -1;
    for (double probe : {opt.x_max, opt.x_max / 2, opt.x_max / 4}) {
        if (I(probe) >= opt.floor) {
            hi = probe;
            break;
        }
    }
    if (hi < 0)
        throw DegenerateFlat(seq.label() + ": no measurable " + std::string(to_string(axis)) + " infidelity");

    // smallest x where the infidelity reaches the floor
    double llo = std::log(1e-18), lhi = std::log(hi);
    if (I(std::exp(llo)) >= opt.floor) {
        lhi = llo;
    } else {
        for (int it = 0; it < 60 && lhi - llo > 1e-13; ++it) {
            const double mid = 0.5 * (llo + lhi);
            if (I(std::exp(mid)) >= opt.floor)
                lhi = mid;
            else
                llo = mid;
        }
    }
    const double x0 = std::exp(lhi);

    const int N = opt.points;
    std::vector<double> xs(N), lx(N), ly(N);
    for (int k = 0; k < N; ++k) {
        xs[k] = x0 * std::pow(opt.span, double(k) / (N - 1));
        lx[k] = std::log(xs[k]);
        ly[k] = std::log(I(xs[k]));
    }

    std::vector<double> mids, slopes;
    for (int k = 0; k < opt.slope_levels; ++k) {
        mids.push_back(std::sqrt(xs[k] * xs[k + 1]));
        slopes.push_back((ly[k + 1] - ly[k]) / (lx[k + 1] - lx[k]));
    }

    OrderEstimate est;
    est.exponent = extrapolate_to_zero(mids, slopes);
    est.rounded_order = static_cast<int>(std::lround(est.exponent));
    est.integral = std::abs(est.exponent - est.rounded_order) < opt.rounding_gate;
    std::vector<double> g(N);
    for (int k = 0; k < N; ++k) g[k] = std::exp(ly[k] - est.rounded_order * lx[k]);
    est.coefficient = extrapolate_to_zero(std::vector<double>(xs.begin(), xs.begin() + opt.coeff_levels),
                                          std::vector<double>(g.begin(), g.begin() + opt.coeff_levels));
    est.fit_residual = 0;
    for (double gk : g) est.fit_residual = std::max(est.fit_residual, std::abs(gk / est.coefficient - 1));
    est.window_min = xs.front();
    est.window_max = xs.back();
    return est;
}

namespace {

void classify_axis(const PulseSequence& seq, Axis axis, std::optional<int>& order,
                   std::optional<OrderEstimate>& est, std::vector<std::string>& warnings) {
    try {
        est = infidelity_order(seq, axis);
        if (!est->integral)
            warnings.push_back(std::string(to_string(axis)) + " exponent " + std::to_string(est->exponent) +
                               " is not close to an integer");
        if (est->rounded_order % 2 != 0)
            warnings.push_back(std::string(to_string(axis)) + " infidelity order is odd");
        order = (est->rounded_order - 2) / 2;
    } catch (const DegenerateFlat&) {
        order.reset();
    }
}

}  // namespace

Classification classify(const PulseSequence& seq) {
    Classification c;
    classify_axis(seq, Axis::Pse, c.i, c.pse, c.warnings);
    classify_axis(seq, Axis::Ore, c.j, c.ore, c.warnings);

    if (seq.all_pi() && seq.size() % 2 == 0) {
        c.algebra = check_conditions(to_toggling(PhaseList(seq.phases())), seq.target_phi());
        if (!c.algebra->closure_ok()) c.warnings.push_back("target constraint residual above tolerance");
        const int num_i = c.i ? std::min(*c.i, 2) : 2;
        const int num_j = c.j ? std::min(*c.j, 2) : 2;
        if (num_i != c.algebra->pse_order())
            c.warnings.push_back("pse: numeric order " + std::to_string(num_i) + " vs algebraic " +
                                 std::to_string(c.algebra->pse_order()));
        if (num_j != c.algebra->ore_order())
            c.warnings.push_back("ore: numeric order " + std::to_string(num_j) + " vs algebraic " +
                                 std::to_string(c.algebra->ore_order()));
    }
    return c;
}

std::vector<CompareRow> compare(const std::vector<CompareRequest>& families, double Phi, bool include_cccp) {
    std::vector<CompareRow> rows(families.size());
    const long n = static_cast<long>(families.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        CompareRow& row = rows[k];
        row.label = std::string(to_string(families[k].family));
        row.phi = Phi;
        try {
            const PulseSequence seq = build(families[k].family, Phi, families[k].params);
            row.label = seq.label();
            row.time_cost = time_cost(seq);
            const Classification c = classify(seq);
            row.pse = c.pse;
            row.ore = c.ore;
            row.i = c.i;
            row.j = c.j;
        } catch (const std::exception& e) {
            row.error = e.what();
            row.time_cost = std::numeric_limits<double>::quiet_NaN();
        }
    }
    if (include_cccp) {
        for (const CccpEntry& e : cccp_constants()) {
            CompareRow row;
            row.label = std::string(e.name);
            row.phi = Phi;
            row.time_cost = e.time_cost;
            row.informational = true;
            rows.push_back(row);
        }
    }
    auto strength = [](const CompareRow& r) {
        if (r.informational || !r.error.empty()) return -1;
        // an exact axis outranks any finite order
        return (r.i ? *r.i : 100) + (r.j ? *r.j : 100);
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const CompareRow& a, const CompareRow& b) {
        const bool ea = !a.error.empty(), eb = !b.error.empty();
        if (ea != eb) return eb;
        if (!ea && a.time_cost != b.time_cost) return a.time_cost < b.time_cost;
        return strength(a) > strength(b);
    });
    return rows;
}

}  // namespace zrot
