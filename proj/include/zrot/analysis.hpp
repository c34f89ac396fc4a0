#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zrot/catalog.hpp"
#include "zrot/pulse.hpp"
#include "zrot/toggling.hpp"

namespace zrot {

enum class Axis { Pse, Ore };
std::string_view to_string(Axis a);
Axis parse_axis(std::string_view s);  // "pse" | "ore", case-insensitive

struct OrderEstimate {
    double exponent = 0;  // extrapolated log-log slope at x -> 0
    int rounded_order = 0;
    bool integral = false;  // exponent within the rounding gate of rounded_order
    double coefficient = 0;  // leading coefficient at rounded_order
    double fit_residual = 0;  // max relative deviation of I/x^order from coefficient in the window
    double window_min = 0;
    double window_max = 0;
};

// The sequence shows no measurable infidelity along the axis.
class DegenerateFlat : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sampling is done in quad precision against the sequence's own error-free
// propagator, so the window can sit far below double round-off. The window
// starts where the infidelity reaches `floor` and spans a factor `span` in x.
struct OrderOptions {
    double floor = 1e-26;
    double span = 4.0;
    int points = 8;
    int slope_levels = 4;
    int coeff_levels = 5;
    double x_max = 0.5;
    double rounding_gate = 0.15;
};

OrderEstimate infidelity_order(const PulseSequence& seq, Axis axis, const OrderOptions& opt = {});

// 1 - F along one axis, evaluated in quad precision relative to the
// sequence's error-free propagator. Exposed for diagnostics and tests.
double axis_infidelity(const PulseSequence& seq, Axis axis, double x);

// Polynomial extrapolation of (xs, ys) to x = 0.
double extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys);

struct Classification {
    // corrected error orders; empty when the axis is exact (no infidelity at all)
    std::optional<int> i;
    std::optional<int> j;
    std::optional<OrderEstimate> pse;
    std::optional<OrderEstimate> ore;
    std::optional<ConditionReport> algebra;  // pi-pulse trains only
    std::vector<std::string> warnings;
};

Classification classify(const PulseSequence& seq);

struct CompareRequest {
    FamilyId family;
    BuildParams params;
};

struct CompareRow {
    std::string label;
    double phi = 0;
    double time_cost = 0;
    std::optional<OrderEstimate> pse;
    std::optional<OrderEstimate> ore;
    std::optional<int> i;
    std::optional<int> j;
    bool informational = false;  // constant-only rows with no sequence behind them
    std::string error;
};

std::vector<CompareRow> compare(const std::vector<CompareRequest>& families, double Phi,
                                bool include_cccp = false);

}  // namespace zrot
