#include "zeckorbit/orbit.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace zeckorbit {

void OrbitConfig::validate() const {
    if (u < 1) throw DomainError("orbit: u must be >= 1");
    if (q < 2) throw DomainError("orbit: q must be >= 2");
    if (m < 1) throw DomainError("orbit: M must be >= 1");
    if (family.patterns.empty()) throw DomainError("orbit: empty forbidden family");
    if (!override_ml_check && m < family.max_len())
        throw DomainError("orbit: window length M below max pattern length L (use the override "
                          "flag for exploratory runs)");
}

std::vector<Window> window_sequence(const OrbitConfig& cfg) {
    cfg.validate();
    std::vector<Window> out;
    out.reserve(cfg.n_max + 1);
    Natural x = cfg.u;
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        out.push_back(lsd_prefix(x, cfg.m));
        x *= cfg.q;
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> candidate_period(
    const std::vector<Window>& windows) {
    if (windows.empty()) throw DomainError("candidate_period: empty sequence");
    const std::size_t len = windows.size();
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t p = 1; 2 * p <= len; ++p) {
        // minimal n0 for this p: scan from the tail for the last mismatch
        std::size_t n0 = 0;
        for (std::size_t n = len - p; n-- > 0;) {
            if (!(windows[n] == windows[n + p])) {
                n0 = n + 1;
                break;
            }
        }
        if (n0 + 2 * p > len) continue;  // needs two full periods in view
        if (!best || n0 < best->first) best = {n0, p};
    }
    return best;
}

namespace {

std::vector<std::size_t> accepting_indices(const std::vector<Window>& windows,
                                           const AvoidanceDFA& dfa) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < windows.size(); ++n)
        if (dfa.accepts(windows[n].symbols)) out.push_back(n);
    return out;
}

}  // namespace

OrbitSummary exponent_set(const OrbitConfig& cfg) {
    cfg.validate();
    OrbitSummary summary;
    summary.cfg = cfg;
    summary.mode = OrbitMode::oracle;
    summary.windows = window_sequence(cfg);
    const AvoidanceDFA dfa(cfg.family);
    summary.exponent_set = accepting_indices(summary.windows, dfa);
    summary.period = candidate_period(summary.windows);
    summary.verified_horizon = cfg.n_max;
    summary.verdict = Finiteness::undetermined;
    return summary;
}

OrbitSummary theta_orbit(const OrbitConfig& cfg, const ThetaMap& theta) {
    cfg.validate();
    if (!theta.conflict_free())
        throw ThetaConflicted("theta map carries conflict witnesses; window width " +
                              std::to_string(theta.window_len) +
                              " does not determine the update on the sampled data");
    if (theta.window_len != cfg.m)
        throw DomainError("theta_orbit: theta window length differs from config M");
    if (theta.q != cfg.q) throw DomainError("theta_orbit: theta q differs from config q");

    OrbitSummary summary;
    summary.cfg = cfg;
    summary.mode = OrbitMode::theta;

    std::unordered_map<std::string, std::size_t> seen;
    Window w = lsd_prefix(cfg.u, cfg.m);
    std::size_t n0 = 0, p = 0;
    for (std::size_t step = 0;; ++step) {
        auto [it, inserted] = seen.emplace(w.symbols, step);
        if (!inserted) {
            n0 = it->second;
            p = step - n0;
            break;
        }
        summary.windows.push_back(w);
        auto next = theta.apply(w);
        if (!next)
            throw ThetaIncomplete("orbit leaves the sampled theta domain at window " + w.symbols);
        w = *next;
    }
    summary.period = {{n0, p}};
    summary.verified_horizon = n0 + p;

    const AvoidanceDFA dfa(cfg.family);
    bool cycle_accepting = false;
    for (std::size_t n = n0; n < n0 + p; ++n)
        if (dfa.accepts(summary.windows[n].symbols)) cycle_accepting = true;
    summary.verdict = cycle_accepting ? Finiteness::infinite : Finiteness::finite;

    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        const Window& wn = n < summary.windows.size()
                               ? summary.windows[n]
                               : summary.windows[n0 + (n - n0) % p];
        if (dfa.accepts(wn.symbols)) summary.exponent_set.push_back(n);
    }
    return summary;
}

std::string orbit_to_csv(const OrbitSummary& summary) {
    const AvoidanceDFA dfa(summary.cfg.family);
    std::ostringstream out;
    out << "n,w_n,member\n";
    for (std::size_t n = 0; n < summary.windows.size(); ++n)
        out << n << "," << summary.windows[n].symbols << ","
            << (dfa.accepts(summary.windows[n].symbols) ? "yes" : "no") << "\n";
    return out.str();
}

std::string orbit_to_dot(const OrbitSummary& summary) {
    const AvoidanceDFA dfa(summary.cfg.family);
    std::ostringstream out;
    out << "digraph orbit {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    const std::size_t limit = summary.period ? summary.period->first + summary.period->second
                                             : summary.windows.size();
    for (std::size_t n = 0; n < limit && n < summary.windows.size(); ++n) {
        out << "  n" << n << " [label=\"" << n << ": " << summary.windows[n].symbols << "\""
            << (dfa.accepts(summary.windows[n].symbols)
                    ? ", style=filled, fillcolor=palegreen"
                    : ", style=filled, fillcolor=lightcoral")
            << "];\n";
    }
    for (std::size_t n = 0; n + 1 < limit && n + 1 < summary.windows.size(); ++n)
        out << "  n" << n << " -> n" << (n + 1) << ";\n";
    if (summary.period && summary.period->first + summary.period->second <= summary.windows.size() &&
        summary.period->second > 0) {
        out << "  n" << (summary.period->first + summary.period->second - 1) << " -> n"
            << summary.period->first << " [label=\"cycle\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_string(OrbitMode mode) { return mode == OrbitMode::oracle ? "oracle" : "theta"; }

std::string to_string(Finiteness verdict) {
    switch (verdict) {
        case Finiteness::finite: return "finite";
        case Finiteness::infinite: return "infinite";
        default: return "undetermined";
    }
}

}  // namespace zeckorbit
