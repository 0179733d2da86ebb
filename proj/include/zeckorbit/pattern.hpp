#pragma once

#include "zeckorbit/natural.hpp"
#include "zeckorbit/zeckendorf.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zeckorbit {

// Finite set of non-empty binary forbidden patterns, matched in the LSD-first
// orientation of the digit stream.
struct ForbiddenFamily {
    std::vector<std::string> patterns;

    std::size_t max_len() const;
    /// "11,101" -> {"11","101"}; rejects empty or non-binary patterns.
    static ForbiddenFamily parse(const std::string& text);
    std::string to_string() const;
};

// Deterministic factor-avoidance automaton over {0,1,#}. Reading '#' resets
// the match state (a forbidden factor cannot span the padding symbol); the
// dead state is absorbing and is entered exactly when some pattern occurs as
// a contiguous binary factor.
class AvoidanceDFA {
public:
    explicit AvoidanceDFA(const ForbiddenFamily& family);

    std::size_t state_count() const { return next_.size(); }
    std::size_t start() const { return 0; }
    std::size_t dead() const { return dead_; }

    std::size_t step(std::size_t state, char symbol) const;

    /// True iff v never drives the automaton into the dead state.
    bool accepts(std::string_view v) const;

    std::string to_dot() const;

private:
    static std::size_t symbol_index(char symbol);

    // next_[s][i]: i = 0 ('0'), 1 ('1'), 2 ('#')
    std::vector<std::array<std::size_t, 3>> next_;
    std::size_t dead_ = 0;
};

AvoidanceDFA build_avoidance_dfa(const ForbiddenFamily& family);

/// DFA-based avoidance check; equals segment-wise naive substring search.
bool avoids(std::string_view v, const ForbiddenFamily& family);

/// Independent reference: split v on '#' and substring-search each segment.
bool avoids_naive(std::string_view v, const ForbiddenFamily& family);

}  // namespace zeckorbit
