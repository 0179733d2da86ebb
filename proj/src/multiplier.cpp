#include "zeckorbit/multiplier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace zeckorbit {

MultiplierSpec MultiplierSpec::make(std::uint64_t q) {
    if (q < 2) throw DomainError("multiplier: q must be >= 2");
    MultiplierSpec spec;
    spec.q = q;
    spec.c_bound = c_of_q(Natural(q));
    spec.carry_bound = q + spec.c_bound;
    spec.delay_cap = spec.c_bound + 2;
    return spec;
}

ZeckWord mul_oracle(const Natural& n, std::uint64_t q) {
    if (q < 2) throw DomainError("mul_oracle: q must be >= 2");
    return zeck_encode(n * q);
}

namespace {

// Sliding coefficient window over positions [base, base + coeff.size()).
// Position p carries weight F_{p+2}; positions below base are finalized.
struct StreamState {
    std::deque<std::uint64_t> coeff;
    std::size_t base = 0;
    std::string emitted;  // LSD-first, finalized digits for positions < base

    std::uint64_t& at(std::size_t p) {
        while (p - base >= coeff.size()) coeff.push_back(0);
        return coeff[p - base];
    }
    std::uint64_t get(std::size_t p) const {
        return p - base < coeff.size() ? coeff[p - base] : 0;
    }
};

// One fixpoint pass of the local rewrite rules, never touching finalized
// positions. Returns false if a coefficient exceeded the carry bound.
bool normalize_window(StreamState& st, std::uint64_t carry_bound) {
    std::size_t passes = 64 * (st.coeff.size() + 4);
    bool changed = true;
    while (changed) {
        if (passes-- == 0) return false;
        changed = false;
        for (std::size_t idx = 0; idx < st.coeff.size(); ++idx) {
            const std::size_t p = st.base + idx;
            // 2 F_{p+2} = F_{p+3} + F_p ; the low leg (position p-2, or 0 for
            // p = 1) must stay inside the non-finalized window
            const bool low_leg_ok = p == 0 || (p == 1 && st.base == 0) || (p >= 2 && p - 2 >= st.base);
            if (st.coeff[idx] >= 2 && low_leg_ok) {
                st.coeff[idx] -= 2;
                st.at(p + 1) += 1;
                if (p >= 2)
                    st.at(p - 2) += 1;
                else if (p == 1)
                    st.at(0) += 1;  // F_1 = F_2
                changed = true;
            }
            if (st.coeff[idx] >= 1 && st.get(p + 1) >= 1) {
                // F_{p+2} + F_{p+3} = F_{p+4}
                st.coeff[idx] -= 1;
                st.at(p + 1) -= 1;
                st.at(p + 2) += 1;
                changed = true;
            }
        }
    }
    for (auto c : st.coeff)
        if (c > carry_bound) return false;
    return true;
}

// Finalize the lowest window position. Fails if it is not a clean binary
// digit or would create "11" against the already emitted stream.
std::optional<StreamFailure> finalize_one(StreamState& st) {
    const std::uint64_t d = st.coeff.empty() ? 0 : st.coeff.front();
    if (d > 1)
        return StreamFailure{st.base, "unresolved coefficient " + std::to_string(d) +
                                          " at finalization boundary"};
    if (d == 1 && !st.emitted.empty() && st.emitted.back() == '1')
        return StreamFailure{st.base, "adjacent 1 digits across the finalization boundary"};
    st.emitted.push_back(d ? '1' : '0');
    if (!st.coeff.empty()) st.coeff.pop_front();
    ++st.base;
    return std::nullopt;
}

}  // namespace

StreamResult stream_multiply(const Natural& n, const MultiplierSpec& spec) {
    if (n < 1) throw DomainError("stream_multiply: N must be >= 1");
    if (spec.q < 2) throw DomainError("stream_multiply: q must be >= 2");
    if (spec.carry_bound < spec.q)
        return StreamFailure{0, "carry bound below q, no capacity for a single input digit"};

    std::string input = zeck_encode(n).digits;
    std::reverse(input.begin(), input.end());  // LSD-first

    StreamState st;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i] == '1') st.at(i) += spec.q;
        if (st.get(i) > spec.carry_bound)
            return StreamFailure{i, "carry bound exceeded while absorbing input"};
        if (!normalize_window(st, spec.carry_bound))
            return StreamFailure{i, "carry bound exceeded during rewriting"};
        while (i + 1 - st.base > spec.delay_cap) {
            if (auto fail = finalize_one(st)) return *fail;
        }
    }

    // Input exhausted (only '#' follows); flush the remaining window.
    std::size_t guard = st.coeff.size() + 8 * (spec.c_bound + 2) + 8;
    while (std::any_of(st.coeff.begin(), st.coeff.end(), [](std::uint64_t c) { return c != 0; })) {
        if (guard-- == 0)
            return StreamFailure{st.base, "flush did not terminate within the delay budget"};
        if (!normalize_window(st, spec.carry_bound))
            return StreamFailure{st.base, "carry bound exceeded during flush"};
        if (auto fail = finalize_one(st)) return *fail;
    }

    std::string out = st.emitted;
    while (!out.empty() && out.back() == '0') out.pop_back();
    if (out.empty()) return StreamFailure{st.base, "empty output"};
    std::reverse(out.begin(), out.end());
    ZeckWord word{std::move(out)};
    try {
        zeck_decode(word);  // canonical-form check only; value holds by invariant
    } catch (const FormatError& e) {
        return StreamFailure{st.base, std::string("non-canonical output: ") + e.what()};
    }
    return word;
}

std::optional<Window> ThetaMap::apply(const Window& w) const {
    auto it = entries.find(w.symbols);
    if (it == entries.end()) return std::nullopt;
    return Window{it->second};
}

ThetaMap theta_synthesize(std::uint64_t q, std::size_t m, const Natural& n_cap) {
    if (q < 2) throw DomainError("theta_synthesize: q must be >= 2");
    if (m < 1) throw DomainError("theta_synthesize: M must be >= 1");
    if (n_cap < 1) throw DomainError("theta_synthesize: n_cap must be >= 1");
    ThetaMap theta;
    theta.q = q;
    theta.window_len = m;
    theta.n_cap = n_cap;
    for (Natural n = 1; n <= n_cap; ++n) {
        const Window in = lsd_prefix(n, m);
        const Window out = lsd_prefix(n * q, m);
        auto it = theta.entries.find(in.symbols);
        if (it == theta.entries.end()) {
            theta.entries.emplace(in.symbols, out.symbols);
            theta.first_seen.emplace(in.symbols, n);
        } else if (it->second != out.symbols) {
            theta.conflicts.push_back(
                {theta.first_seen.at(in.symbols), n, in, Window{it->second}, out});
        }
    }
    return theta;
}

std::optional<std::size_t> locality_probe(std::uint64_t q, std::size_t m, const Natural& n_cap,
                                          std::size_t d_max) {
    if (q < 2) throw DomainError("locality_probe: q must be >= 2");
    if (m < 1) throw DomainError("locality_probe: M must be >= 1");
    for (std::size_t d = 0; d <= d_max; ++d) {
        std::unordered_map<std::string, std::string> seen;
        bool clean = true;
        for (Natural n = 1; n <= n_cap && clean; ++n) {
            const Window in = lsd_prefix(n, m + d);
            const Window out = lsd_prefix(n * q, m);
            auto [it, inserted] = seen.emplace(in.symbols, out.symbols);
            if (!inserted && it->second != out.symbols) clean = false;
        }
        if (clean) return d;
    }
    return std::nullopt;
}

std::string theta_to_dot(const ThetaMap& theta, const ForbiddenFamily* family) {
    std::ostringstream out;
    out << "digraph theta {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    std::optional<AvoidanceDFA> dfa;
    if (family) dfa.emplace(*family);
    std::map<std::string, bool> nodes;
    for (const auto& [in, to] : theta.entries) {
        nodes.emplace(in, true);
        nodes.emplace(to, true);
    }
    for (const auto& [name, _] : nodes) {
        out << "  \"" << name << "\"";
        if (dfa) out << (dfa->accepts(name) ? " [style=filled, fillcolor=palegreen]"
                                            : " [style=filled, fillcolor=lightcoral]");
        out << ";\n";
    }
    for (const auto& [in, to] : theta.entries)
        out << "  \"" << in << "\" -> \"" << to << "\";\n";
    if (!theta.conflicts.empty()) {
        out << "  /* conflict witnesses:\n";
        for (const auto& c : theta.conflicts)
            out << "     n1=" << c.n1 << " n2=" << c.n2 << " in=" << c.in.symbols
                << " out1=" << c.out1.symbols << " out2=" << c.out2.symbols << "\n";
        out << "  */\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace zeckorbit
