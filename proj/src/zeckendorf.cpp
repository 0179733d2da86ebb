#include "zeckorbit/zeckendorf.hpp"

#include <algorithm>
#include <sstream>

namespace zeckorbit {

ZeckWord zeck_encode(const Natural& n) {
    if (n < 1) throw DomainError("zeck_encode: N must be >= 1");
    const std::size_t k = fib_leading_index(n);
    std::string digits(k - 1, '0');  // digits[0] <-> F_k, digits[k-2] <-> F_2
    Natural rest = n;
    std::size_t i = k;
    while (rest > 0) {
        // after subtracting F_i the remainder is < F_{i-1}, so step by 2
        digits[k - i] = '1';
        rest -= fib(i);
        if (rest == 0) break;
        i -= 2;
        while (fib(i) > rest) --i;
    }
    return ZeckWord{std::move(digits)};
}

Natural zeck_decode(const ZeckWord& w) {
    const std::string& d = w.digits;
    if (d.empty()) throw FormatError("zeck_decode: empty word");
    if (d.front() == '0') throw FormatError("zeck_decode: leading zero");
    Natural value = 0;
    const std::size_t k = d.size() + 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const char c = d[j];
        if (c != '0' && c != '1') throw FormatError("zeck_decode: illegal symbol");
        if (c == '1') {
            if (j + 1 < d.size() && d[j + 1] == '1')
                throw FormatError("zeck_decode: adjacent 1 digits");
            value += fib(k - j);
        }
    }
    return value;
}

Window lsd_prefix(const Natural& n, std::size_t m) {
    if (n < 1) throw DomainError("lsd_prefix: N must be >= 1");
    if (m < 1) throw DomainError("lsd_prefix: M must be >= 1");
    std::string s = zeck_encode(n).digits;
    std::reverse(s.begin(), s.end());
    if (s.size() < m)
        s.append(m - s.size(), kPad);
    else
        s.resize(m);
    return Window{std::move(s)};
}

Natural digit_string_value(const GeneralDigitString& s) {
    Natural value = 0;
    for (std::size_t i = 0; i < s.digits.size(); ++i) {
        if (s.digits[i] < 0) throw DomainError("digit_string_value: negative digit");
        if (s.digits[i] != 0) value += Natural(s.digits[i]) * fib(i + 2);
    }
    return value;
}

ZeckWord normalize_value(const GeneralDigitString& s) {
    return zeck_encode(digit_string_value(s));
}

ZeckWord normalize_rewrite(const GeneralDigitString& s) {
    // coefficients LSD-first, c[p] multiplies F_{p+2}
    std::vector<long long> c(s.digits.begin(), s.digits.end());
    c.resize(c.size() + 4, 0);
    const std::size_t cap = (s.digits.size() + 4) * (s.digits.size() + 4) + 64;
    for (std::size_t pass = 0; pass < cap; ++pass) {
        bool changed = false;
        for (std::size_t p = 0; p + 2 < c.size(); ++p) {
            if (c[p] >= 2) {
                // 2 F_{p+2} = F_{p+3} + F_p  (F_1 = F_2, F_0 = 0)
                c[p] -= 2;
                c[p + 1] += 1;
                if (p >= 2)
                    c[p - 2] += 1;
                else if (p == 1)
                    c[0] += 1;
                changed = true;
            }
            if (c[p] >= 1 && c[p + 1] >= 1) {
                // F_{p+2} + F_{p+3} = F_{p+4}
                c[p] -= 1;
                c[p + 1] -= 1;
                c[p + 2] += 1;
                changed = true;
            }
            if (p + 3 == c.size() && (c[p + 1] >= 2 || c[p + 2] >= 1)) c.resize(c.size() + 4, 0);
        }
        if (!changed) {
            while (!c.empty() && c.back() == 0) c.pop_back();
            if (c.empty()) throw DomainError("normalize: value is zero");
            std::string out(c.size(), '0');
            for (std::size_t p = 0; p < c.size(); ++p)
                out[c.size() - 1 - p] = c[p] ? '1' : '0';
            return ZeckWord{std::move(out)};
        }
    }
    return normalize_value(s);  // cap exhausted
}

GeneralDigitString parse_digit_string(const std::string& text) {
    GeneralDigitString out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw FormatError("digit string: bad token '" + tok + "'");
        }
        if (pos != tok.size() || v < 0)
            throw FormatError("digit string: bad token '" + tok + "'");
        out.digits.push_back(v);
    }
    if (out.digits.empty()) throw FormatError("digit string: empty");
    return out;
}

}  // namespace zeckorbit
