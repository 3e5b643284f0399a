#pragma once

#include <utility>
#include <vector>

#include "cga/series.hpp"

namespace cga {

enum class EmbedKind { One, Two, Hat };
enum class IdealKind { SZeta, STau, SZetaTau, Delta };

// x^a y^b with exponents at guard precision; composition is componentwise.
struct GroupElt {
    PadicInt a, b;

    static GroupElt make(const Params& par, std::int64_t a, std::int64_t b) {
        return GroupElt{PadicInt::exponent(par, a), PadicInt::exponent(par, b)};
    }
    GroupElt compose(const GroupElt& o) const { return GroupElt{a + o.a, b + o.b}; }
    GroupElt inverse() const { return GroupElt{-a, -b}; }
    bool is_identity() const { return a.v == 0 && b.v == 0; }
};

// The completed group algebras R and S with their structure maps.  Holds the
// cached substitution images for the involution, the chart changes and the
// gamma action.
class Algebra {
public:
    explicit Algebra(const Params& par);

    const Params& params() const { return par_; }
    PadicInt half() const { return half_; }

    // ring endomorphism of R induced by inverting the group: an involution
    Series star(const Series& r) const;
    // (r_plus, r_minus) with r = r_plus + r_minus, star-fixed / star-negated
    std::pair<Series, Series> split_pm(const Series& r) const;
    bool in_plus(const Series& r) const;
    bool in_minus(const Series& r) const;

    Series embed(EmbedKind k, const Series& r) const; // R -> S
    Series to_chart(const Series& s, Chart target) const;
    Series gamma(const Series& s) const; // coordinate swap action on S
    Series antisym(const Series& s) const { return s - gamma(s); }
    Series pi(const Series& s) const; // retraction S -> R, kernel Delta

    bool ideal_member(const Series& s, IdealKind which) const;

    // (r(1)s(2))(1 - gamma), in chart SA
    Series pairing(const Series& r, const Series& s) const;
    // r s* - s r*, in R
    Series pairing_pi(const Series& r, const Series& s) const;

    Series group_elt_series(const GroupElt& g) const; // in R
    Series hat_series(const GroupElt& g) const;       // in SB: (1+zeta)^a (1+tau)^b

private:
    Params par_;
    PadicInt half_;
    std::vector<Series> star_img_;
    std::vector<Series> a2b_img_;
    std::vector<Series> b2a_img_;
    std::vector<Series> gammab_img_;
};

} // namespace cga
