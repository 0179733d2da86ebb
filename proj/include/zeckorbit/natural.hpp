#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeckorbit {

// Exact non-negative integer. All arithmetic in this library is exact.
using Natural = boost::multiprecision::cpp_int;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n.
const Natural& fib(std::size_t i);

/// Largest k with F_k <= N, searched from index 2 upward. Requires N >= 1.
std::size_t fib_leading_index(const Natural& n);

/// |Z(N)| = k - 1 where F_k <= N < F_{k+1}. Requires N >= 1.
std::size_t zeck_length(const Natural& n);

/// C(q) = min{c >= 1 : F_c >= q}. Requires q >= 2.
std::size_t c_of_q(const Natural& q);

}  // namespace zeckorbit
