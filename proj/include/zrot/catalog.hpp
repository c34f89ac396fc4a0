#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zrot/pulse.hpp"

namespace zrot {

enum class FamilyId {
    baseline,
    s4_111,
    s4_112,
    s6_201,
    s6_202,
    s6_203,
    s6_204,
    s6_221,
    s6_222,
    s8_331,
    s8_332,
    general,
    scrofulous,
    sk1,
    bb1,
    ichikawa_short,
    ichikawa_nested,
};

struct FamilyInfo {
    FamilyId id;
    std::string_view name;
    int n;  // pulse count; 0 when it depends on parameters
    int i;  // corrected strength-error order; -1 when parameter dependent
    int j;  // corrected off-resonance order; -1 when parameter dependent
    std::string_view construction;
    bool needs_params;
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo& family_info(FamilyId id);
std::string_view to_string(FamilyId id);
FamilyId parse_family(std::string_view name);  // throws std::invalid_argument

// Requested combination exists in principle but is not available here.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GeneralFamilyParams {
    int n = 6;
    double alpha = 0;
    int j1 = 0;
    int j2 = 0;
    int orientation = +1;  // odd polygon stepped this way, even polygon opposite
};

struct BuildParams {
    int branch = +1;
    std::optional<GeneralFamilyParams> general;
};

PulseSequence build(FamilyId family, double Phi, const BuildParams& params = {});

// Closed-form alpha of the antisymmetric six-pulse family; throws
// std::domain_error when the arccos argument leaves [-1, 1].
double antisym_alpha(double Phi, int branch);

PulseSequence general_family(const GeneralFamilyParams& params, double Phi);
void validate(const GeneralFamilyParams& params);

// Phases (a, b) of the short Ichikawa sequence after polishing the printed
// four-digit values so the first-order strength error vanishes exactly.
std::pair<double, double> ichikawa_phases();

struct CccpEntry {
    std::string_view name;
    double time_cost;
};
const std::vector<CccpEntry>& cccp_constants();

}  // namespace zrot
