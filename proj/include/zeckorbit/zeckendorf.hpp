#pragma once

#include "zeckorbit/natural.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace zeckorbit {

inline constexpr char kPad = '#';

// Canonical Zeckendorf word, MSD-first over {0,1}. Never empty, never a
// leading '0', never the factor "11". digits[0] is the coefficient of the
// leading Fibonacci index k, digits.back() the coefficient of F_2.
struct ZeckWord {
    std::string digits;
    auto operator<=>(const ZeckWord&) const = default;
};

// Fixed-length window over {0,1,#}, LSD-first: symbols[0] is the coefficient
// of F_2. Produced windows have shape b_1..b_a #^(M-a).
struct Window {
    std::string symbols;
    auto operator<=>(const Window&) const = default;
};

// Unnormalized Fibonacci-positional digit string, LSD-first: digits[i] is a
// small non-negative coefficient of F_{i+2}.
struct GeneralDigitString {
    std::vector<int> digits;
};

/// Greedy Zeckendorf encoding of N >= 1 (largest F_i <= remainder, i >= 2).
ZeckWord zeck_encode(const Natural& n);

/// Exact value of a valid Zeckendorf word; rejects leading zeros and "11".
Natural zeck_decode(const ZeckWord& w);

/// pref_M(rev(Z(N)) #^omega): LSD-first digits, '#'-padded or truncated to M.
Window lsd_prefix(const Natural& n, std::size_t m);

Natural digit_string_value(const GeneralDigitString& s);

/// Canonicalize via exact value computation (the correctness anchor).
ZeckWord normalize_value(const GeneralDigitString& s);

/// Canonicalize via local rewriting (011 -> 100 and the 2F_i split). Falls
/// back to normalize_value if the rewrite loop hits its iteration cap.
ZeckWord normalize_rewrite(const GeneralDigitString& s);

inline ZeckWord normalize(const GeneralDigitString& s) { return normalize_rewrite(s); }

/// Parse "0,1,1" (LSD-first, comma-separated decimal digits).
GeneralDigitString parse_digit_string(const std::string& text);

}  // namespace zeckorbit
