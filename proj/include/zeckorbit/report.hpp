#pragma once

#include "zeckorbit/multiplier.hpp"
#include "zeckorbit/orbit.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace zeckorbit {

nlohmann::json theta_to_json(const ThetaMap& theta);
ThetaMap theta_from_json(const nlohmann::json& j);

nlohmann::json orbit_to_json(const OrbitSummary& summary);

// One named comparison against a value stated in the source material.
struct PaperClaim {
    std::string id;
    nlohmann::json expected;
    nlohmann::json observed;
    bool match = false;
};

struct Report {
    nlohmann::json inputs;
    nlohmann::json results;
    std::vector<PaperClaim> claims;

    bool all_match() const;
    nlohmann::json to_json() const;
};

/// The worked 2^n example: Table-1 window rows, the exponent set on [0,200],
/// and the preperiod/period claim, each recorded with expected vs observed.
/// Mismatches are data, not faults.
Report verify_example3();

}  // namespace zeckorbit
