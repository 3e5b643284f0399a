#pragma once

#include <cstdint>

#include "cga/errors.hpp"

namespace cga {

// Global working parameters: coefficients live in Z/p^N, series are truncated at
// total degree D, group exponents carry G extra guard digits so that binomial
// coefficients C(a,k) with p-adic upper argument are well defined at precision N
// for every k <= D (v_p(k!) <= (k-1)/(p-1) < G).
struct Params {
    std::int64_t p = 3;
    int precision = 4; // N
    int maxdeg = 6;    // D
    int guard = 0;     // G

    std::uint64_t mod_coeff = 0; // p^N
    std::uint64_t mod_exp = 0;   // p^(N+G)

    static Params make(std::int64_t p, int precision, int maxdeg);

    bool operator==(const Params&) const = default;
};

namespace detail {

inline std::uint64_t checked_pow(std::int64_t p, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(r) * static_cast<std::uint64_t>(p);
        if (t > (static_cast<unsigned __int128>(1) << 62))
            throw precondition_error("p^(N+G) exceeds the 64-bit working range");
        r = static_cast<std::uint64_t>(t);
    }
    return r;
}

} // namespace detail

inline Params Params::make(std::int64_t p, int precision, int maxdeg) {
    if (p < 3 || p % 2 == 0)
        throw precondition_error("p must be an odd prime >= 3");
    // small trial division; the CLI only ever passes small primes
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw precondition_error("p must be prime");
    if (precision < 1) throw precondition_error("precision must be >= 1");
    if (maxdeg < 2) throw precondition_error("maxdeg must be >= 2");
    if (maxdeg > 12) throw precondition_error("maxdeg above 12 is not supported");
    Params par;
    par.p = p;
    par.precision = precision;
    par.maxdeg = maxdeg;
    par.guard = static_cast<int>((maxdeg - 1) / (p - 1)) + 1;
    par.mod_coeff = detail::checked_pow(p, precision);
    par.mod_exp = detail::checked_pow(p, precision + par.guard);
    return par;
}

} // namespace cga
