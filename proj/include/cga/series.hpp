#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cga/padic.hpp"
#include "cga/params.hpp"

namespace cga {

// The three public coordinate systems.  R is the rank-2 ring {xi, eta};
// SA and SB are the two presentations of the rank-4 ring, related by
// zeta = xi1 + xi2 + xi1*xi2, tau = eta1 + eta2 + eta1*eta2.
enum class Chart : std::uint8_t { R = 0, SA = 1, SB = 2 };

inline int chart_arity(Chart c) { return c == Chart::R ? 2 : 4; }
const char* chart_name(Chart c);
const char* var_name(Chart c, int v);
int var_index(Chart c, const std::string& name); // -1 when absent

// chart SB variable slots
inline constexpr int kZeta = 2;
inline constexpr int kTau = 3;

// Monomial bookkeeping for a fixed arity and degree bound: ranks are assigned in
// graded order (total degree ascending, exponent tuples lexicographically
// descending within a degree), which is also the serialization order.
struct MonoTable {
    int arity = 0;
    int maxdeg = 0;
    std::size_t count = 0;
    std::vector<std::array<std::uint8_t, 4>> expo;
    std::vector<int> degree;
    std::vector<std::size_t> deg_start; // size maxdeg+1; ranks of degree < v are [0, deg_start[v])
    std::vector<std::uint32_t> prod;    // count*count; kNoRank when the product degree >= maxdeg

    static constexpr std::uint32_t kNoRank = 0xffffffffu;

    std::size_t count_below(int v) const { return deg_start[v]; }
    std::uint32_t rank_of(const std::array<std::uint8_t, 4>& e) const;

    static const MonoTable& get(int arity, int maxdeg);
};

// Sparse-in-spirit truncated power series: coefficients mod p^N for every
// monomial of total degree < validity; entries at or above validity are
// identically zero.  Dense storage is an implementation detail; the canonical
// (serialized) form lists only nonzero terms in rank order.
struct Series {
    Chart chart = Chart::R;
    Params par;
    int validity = 0;
    std::vector<std::uint64_t> c;

    const MonoTable& table() const { return MonoTable::get(chart_arity(chart), par.maxdeg); }

    static Series zero(Chart chart, const Params& par, int validity = -1);
    static Series constant(Chart chart, const Params& par, std::int64_t value, int validity = -1);
    static Series variable(Chart chart, const Params& par, int var, int validity = -1);

    std::uint64_t coeff(const std::array<std::uint8_t, 4>& e) const;
    void set_coeff(const std::array<std::uint8_t, 4>& e, std::uint64_t value);

    bool is_zero() const;
    // degree of the lowest nonzero monomial, or -1 when zero below validity
    int low_degree() const;
    // zero out everything at or above the given validity and adopt it
    void truncate_to(int v);
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);

Series scale(const Series& a, const PadicInt& k);
Series scale(const Series& a, std::int64_t k);

// equality of all coefficients of total degree < min(v, a.validity, b.validity)
bool eq_below(const Series& a, const Series& b, int v);
inline bool eq_below(const Series& a, const Series& b) { return eq_below(a, b, a.par.maxdeg); }
bool is_zero_below(const Series& a, int v);

// Substitute images[i] (zero constant term, common chart) for variable i of s.
Series subst(const Series& s, const std::vector<Series>& images);

// Exact division by a chart variable; every stored monomial must contain it.
Series divide_var(const Series& s, int var);

// The ring map sending var to 0 (drops every monomial containing var). Exact.
Series kill_var(const Series& s, int var);

// s minus kill_var(s): the part of s lying in the principal ideal of var.
Series var_part(const Series& s, int var);

// Injective variable renaming into a target chart; slot_map[i] is the target
// slot of source variable i, or -1 to require a zero exponent.
Series remap(const Series& s, Chart target, const std::array<int, 4>& slot_map);

// x^a y^b as (1+xi)^a (1+eta)^b truncated at degree D, validity D.  The
// exponents carry guard precision.
Series group_series(const Params& par, const PadicInt& a, const PadicInt& b);

// (1 + var)^{-1} - 1 in the given chart, validity D.
Series inv_one_plus_var(Chart chart, const Params& par, int var);

// canonical text form / parser (grammar: sum of integer-coefficient monomial terms)
std::string format_series(const Series& s);
Series parse_series(const std::string& text, Chart chart, const Params& par);
Series parse_series(const std::string& text, const Params& par); // chart inferred

} // namespace cga
