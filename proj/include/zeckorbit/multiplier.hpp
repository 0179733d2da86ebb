#pragma once

#include "zeckorbit/natural.hpp"
#include "zeckorbit/pattern.hpp"
#include "zeckorbit/zeckendorf.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zeckorbit {

struct MultiplierSpec {
    std::uint64_t q = 2;
    std::size_t c_bound = 3;          // min{c >= 1 : F_c >= q}
    std::uint64_t carry_bound = 5;    // max pending coefficient in a stream run
    std::size_t delay_cap = 5;        // max symbols read but not yet emitted

    static MultiplierSpec make(std::uint64_t q);
};

// Diagnostic for a streaming run that could not realize q*N within the
// configured bounds. Never stands in for a wrong answer.
struct StreamFailure {
    std::size_t position = 0;
    std::string reason;
};

using StreamResult = std::variant<ZeckWord, StreamFailure>;

/// Ground truth: zeck_encode(q * N).
ZeckWord mul_oracle(const Natural& n, std::uint64_t q);

/// LSD-first bounded-carry multiplication. On success the output equals
/// mul_oracle(n, spec.q) by construction (exact value invariant plus a final
/// canonical-form check); otherwise returns a StreamFailure diagnostic.
StreamResult stream_multiply(const Natural& n, const MultiplierSpec& spec);

// Two scanned integers with equal input windows but different output windows;
// refutes functionality of the window-update map at this width.
struct ConflictWitness {
    Natural n1, n2;
    Window in;
    Window out1, out2;
};

// Empirically synthesized window-update map for multiplication by q: the
// pairs (lsd_prefix(N,M), lsd_prefix(qN,M)) observed over N = 1..n_cap.
struct ThetaMap {
    std::uint64_t q = 2;
    std::size_t window_len = 1;
    Natural n_cap;
    std::map<std::string, std::string> entries;
    std::map<std::string, Natural> first_seen;  // witness N per entry
    std::vector<ConflictWitness> conflicts;

    bool conflict_free() const { return conflicts.empty(); }
    std::optional<Window> apply(const Window& w) const;
};

ThetaMap theta_synthesize(std::uint64_t q, std::size_t m, const Natural& n_cap);

/// Least D <= d_max such that the width-(M+D) input window determines the
/// width-M output window over N = 1..n_cap; nullopt if none does.
std::optional<std::size_t> locality_probe(std::uint64_t q, std::size_t m, const Natural& n_cap,
                                          std::size_t d_max);

std::string theta_to_dot(const ThetaMap& theta, const ForbiddenFamily* family = nullptr);

}  // namespace zeckorbit
