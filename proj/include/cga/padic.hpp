#pragma once

#include <cstdint>
#include <optional>

#include "cga/errors.hpp"
#include "cga/params.hpp"

namespace cga {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t reduce_int(std::int64_t v, std::uint64_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

// A residue mod p^k with its precision carried along.  k is precision for ring
// coefficients and precision+guard for group exponents.
struct PadicInt {
    std::uint64_t v = 0;   // residue in [0, mod)
    std::int64_t p = 0;    // the prime
    std::uint64_t mod = 0; // p^k

    PadicInt() = default;
    PadicInt(std::int64_t value, std::int64_t p, std::uint64_t mod)
        : v(reduce_int(value, mod)), p(p), mod(mod) {}

    static PadicInt coeff(const Params& par, std::int64_t value) {
        return PadicInt(value, par.p, par.mod_coeff);
    }
    static PadicInt exponent(const Params& par, std::int64_t value) {
        return PadicInt(value, par.p, par.mod_exp);
    }

    bool operator==(const PadicInt&) const = default;
};

namespace detail {
inline void check_same(const PadicInt& a, const PadicInt& b) {
    if (a.p != b.p || a.mod != b.mod)
        throw precondition_error("PadicInt precision mismatch");
}
} // namespace detail

inline PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    detail::check_same(a, b);
    PadicInt r = a;
    r.v = addmod(a.v, b.v, a.mod);
    return r;
}

inline PadicInt operator-(const PadicInt& a) {
    PadicInt r = a;
    r.v = a.v == 0 ? 0 : a.mod - a.v;
    return r;
}

inline PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    detail::check_same(a, b);
    PadicInt r = a;
    r.v = submod(a.v, b.v, a.mod);
    return r;
}

inline PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    detail::check_same(a, b);
    PadicInt r = a;
    r.v = mulmod(a.v, b.v, a.mod);
    return r;
}

// largest e with p^e | v, or nullopt for v = 0 ("infinite")
inline std::optional<int> valuation(const PadicInt& a) {
    if (a.v == 0) return std::nullopt;
    int e = 0;
    std::uint64_t v = a.v;
    while (v % static_cast<std::uint64_t>(a.p) == 0) {
        v /= static_cast<std::uint64_t>(a.p);
        ++e;
    }
    return e;
}

// Inverse of a unit mod p^k (extended Euclid on the odd prime power).
inline PadicInt invert_unit(const PadicInt& a) {
    if (a.v % static_cast<std::uint64_t>(a.p) == 0)
        throw precondition_error("invert_unit: argument is divisible by p");
    // extended gcd of (a.v, mod)
    std::int64_t r0 = static_cast<std::int64_t>(a.mod), r1 = static_cast<std::int64_t>(a.v);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    PadicInt out = a;
    out.v = reduce_int(t0, a.mod);
    return out;
}

// C(a,k) for a p-adic upper argument given at guard precision p^(N+G); the result
// is exact at coefficient precision p^N.  Computed as (falling factorial)/k! with
// the p-part of k! divided out of the residue and the unit part inverted.
inline PadicInt binomial(const Params& par, const PadicInt& a, int k) {
    if (a.mod != par.mod_exp)
        throw precondition_error("binomial: upper argument must carry guard precision");
    if (k < 0 || k > par.maxdeg)
        throw precondition_error("binomial: k exceeds the degree bound");
    std::uint64_t m = par.mod_exp;
    std::uint64_t fall = 1 % m;
    for (int i = 0; i < k; ++i)
        fall = mulmod(fall, submod(a.v, reduce_int(i, m), m), m);
    // k! = p^e * u with u a unit
    int e = 0;
    std::uint64_t u = 1 % m;
    for (int i = 2; i <= k; ++i) {
        std::int64_t f = i;
        while (f % par.p == 0) {
            f /= par.p;
            ++e;
        }
        u = mulmod(u, reduce_int(f, m), m);
    }
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= static_cast<std::uint64_t>(par.p);
    // guard digits absorb the loss: fall is divisible by p^e as a residue
    std::uint64_t q = fall / pe;
    PadicInt uu(0, par.p, m);
    uu.v = u;
    std::uint64_t res = mulmod(q, invert_unit(uu).v, m);
    return PadicInt::coeff(par, static_cast<std::int64_t>(res % par.mod_coeff));
}

} // namespace cga
