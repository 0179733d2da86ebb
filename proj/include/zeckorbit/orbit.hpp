#pragma once

#include "zeckorbit/multiplier.hpp"
#include "zeckorbit/natural.hpp"
#include "zeckorbit/pattern.hpp"
#include "zeckorbit/zeckendorf.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zeckorbit {

struct ThetaConflicted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThetaIncomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrbitConfig {
    Natural u = 1;
    std::uint64_t q = 2;
    std::size_t m = 5;
    ForbiddenFamily family;
    std::size_t n_max = 10000;
    bool override_ml_check = false;  // allow M < L for exploratory runs

    void validate() const;
};

enum class OrbitMode { oracle, theta };
enum class Finiteness { finite, infinite, undetermined };

struct OrbitSummary {
    OrbitConfig cfg;
    OrbitMode mode = OrbitMode::oracle;
    std::vector<std::size_t> exponent_set;
    // (n0, p): windows repeat with period p from n0 on
    std::optional<std::pair<std::size_t, std::size_t>> period;
    std::size_t verified_horizon = 0;
    Finiteness verdict = Finiteness::undetermined;
    std::vector<Window> windows;  // visited window sequence, index = n
};

/// w_n = lsd_prefix(u * q^n, M) for n = 0..n_max, exact arithmetic.
std::vector<Window> window_sequence(const OrbitConfig& cfg);

/// Smallest (n0, p), n0 first then p, with w_{n+p} = w_n on the whole tail
/// and at least two full periods inside the horizon.
std::optional<std::pair<std::size_t, std::size_t>> candidate_period(
    const std::vector<Window>& windows);

/// Oracle mode: exact windows up to n_max, candidate period, verdict always
/// undetermined (finite data proves nothing about infinitude).
OrbitSummary exponent_set(const OrbitConfig& cfg);

/// Paper-faithful mode: iterate the synthesized window map to the first
/// repeated state. Requires a conflict-free theta defined on the whole orbit.
OrbitSummary theta_orbit(const OrbitConfig& cfg, const ThetaMap& theta);

std::string orbit_to_csv(const OrbitSummary& summary);
std::string orbit_to_dot(const OrbitSummary& summary);

std::string to_string(OrbitMode mode);
std::string to_string(Finiteness verdict);

}  // namespace zeckorbit
