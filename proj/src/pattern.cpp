#include "zeckorbit/pattern.hpp"

#include <array>
#include <queue>
#include <sstream>

namespace zeckorbit {

std::size_t ForbiddenFamily::max_len() const {
    std::size_t l = 0;
    for (const auto& p : patterns) l = std::max(l, p.size());
    return l;
}

ForbiddenFamily ForbiddenFamily::parse(const std::string& text) {
    ForbiddenFamily fam;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw DomainError("forbidden family: empty pattern");
        for (char c : tok)
            if (c != '0' && c != '1')
                throw DomainError("forbidden family: pattern must be binary: " + tok);
        fam.patterns.push_back(tok);
    }
    if (fam.patterns.empty()) throw DomainError("forbidden family: no patterns");
    return fam;
}

std::string ForbiddenFamily::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i) out += ',';
        out += patterns[i];
    }
    return out;
}

AvoidanceDFA::AvoidanceDFA(const ForbiddenFamily& family) {
    if (family.patterns.empty()) throw DomainError("avoidance dfa: empty family");

    // Aho-Corasick trie over {0,1}
    struct Node {
        std::array<int, 2> child{-1, -1};
        int fail = 0;
        bool terminal = false;
    };
    std::vector<Node> trie(1);
    for (const auto& p : family.patterns) {
        if (p.empty()) throw DomainError("avoidance dfa: empty pattern");
        int cur = 0;
        for (char ch : p) {
            const int b = ch - '0';
            if (trie[cur].child[b] < 0) {
                trie[cur].child[b] = static_cast<int>(trie.size());
                trie.emplace_back();
            }
            cur = trie[cur].child[b];
        }
        trie[cur].terminal = true;
    }

    // failure links, BFS; goto closure on the fly
    std::queue<int> bfs;
    for (int b = 0; b < 2; ++b) {
        int& c = trie[0].child[b];
        if (c < 0)
            c = 0;
        else {
            trie[c].fail = 0;
            bfs.push(c);
        }
    }
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        trie[v].terminal = trie[v].terminal || trie[trie[v].fail].terminal;
        for (int b = 0; b < 2; ++b) {
            int& c = trie[v].child[b];
            if (c < 0)
                c = trie[trie[v].fail].child[b];
            else {
                trie[c].fail = trie[trie[v].fail].child[b];
                bfs.push(c);
            }
        }
    }

    dead_ = trie.size();
    next_.resize(trie.size() + 1);
    for (std::size_t s = 0; s < trie.size(); ++s) {
        for (int b = 0; b < 2; ++b) {
            const int t = trie[s].child[b];
            next_[s][b] = trie[t].terminal ? dead_ : static_cast<std::size_t>(t);
        }
        next_[s][2] = 0;  // '#' breaks any partial match
    }
    next_[dead_] = {dead_, dead_, dead_};
    if (trie[0].terminal)  // degenerate, unreachable for non-empty patterns
        next_[0] = {dead_, dead_, dead_};
}

std::size_t AvoidanceDFA::symbol_index(char symbol) {
    switch (symbol) {
        case '0': return 0;
        case '1': return 1;
        case kPad: return 2;
        default: throw FormatError(std::string("avoidance dfa: illegal symbol '") + symbol + "'");
    }
}

std::size_t AvoidanceDFA::step(std::size_t state, char symbol) const {
    return next_[state][symbol_index(symbol)];
}

bool AvoidanceDFA::accepts(std::string_view v) const {
    std::size_t s = start();
    for (char c : v) {
        s = step(s, c);
        if (s == dead_) return false;
    }
    return true;
}

std::string AvoidanceDFA::to_dot() const {
    std::ostringstream out;
    out << "digraph avoidance_dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  " << dead_ << " [shape=doublecircle, label=\"dead\"];\n";
    out << "  start [shape=point];\n  start -> 0;\n";
    static constexpr char symbols[3] = {'0', '1', kPad};
    for (std::size_t s = 0; s < next_.size(); ++s) {
        for (int i = 0; i < 3; ++i)
            out << "  " << s << " -> " << next_[s][i] << " [label=\"" << symbols[i] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

AvoidanceDFA build_avoidance_dfa(const ForbiddenFamily& family) { return AvoidanceDFA(family); }

bool avoids(std::string_view v, const ForbiddenFamily& family) {
    return AvoidanceDFA(family).accepts(v);
}

bool avoids_naive(std::string_view v, const ForbiddenFamily& family) {
    std::size_t pos = 0;
    while (pos <= v.size()) {
        std::size_t end = v.find(kPad, pos);
        if (end == std::string_view::npos) end = v.size();
        const std::string_view segment = v.substr(pos, end - pos);
        for (const auto& p : family.patterns)
            if (segment.find(p) != std::string_view::npos) return false;
        pos = end + 1;
    }
    return true;
}

}  // namespace zeckorbit
