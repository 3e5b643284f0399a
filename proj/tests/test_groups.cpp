#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cga/groups.hpp"
#include "cga/verify.hpp"

#include <vector>

using namespace cga;

namespace {

Params P() { return Params::make(3, 4, 6); }

Series rnd_r(const Algebra& A, Rng& rng) { return random_series(A.params(), Chart::R, rng); }

Series rnd_minus(const Algebra& A, Rng& rng) {
    Series q = rnd_r(A, rng);
    return q - A.star(q);
}

Series pow_series(const Algebra& A, int a, int b) {
    // x^a y^b by repeated multiplication only; a, b may be negative
    const Params& par = A.params();
    Series x = Series::constant(Chart::R, par, 1) + Series::variable(Chart::R, par, 0);
    Series y = Series::constant(Chart::R, par, 1) + Series::variable(Chart::R, par, 1);
    Series xinv = inv_one_plus_var(Chart::R, par, 0) + Series::constant(Chart::R, par, 1);
    Series yinv = inv_one_plus_var(Chart::R, par, 1) + Series::constant(Chart::R, par, 1);
    Series out = Series::constant(Chart::R, par, 1);
    for (int i = 0; i < (a >= 0 ? a : -a); ++i) out = out * (a >= 0 ? x : xinv);
    for (int i = 0; i < (b >= 0 ? b : -b); ++i) out = out * (b >= 0 ? y : yinv);
    return out;
}

// Independent oracle for the coordinate of [y^b, x^a], built only from
// [y,x] = u and the expansion identities [gh,k] = [g,k]^h [h,k] and
// [g,hk] = [g,k] [g,h]^k; conjugation acts on coordinates as multiplication.
Series oracle_comm_coord(const Algebra& A, int a, int b) {
    // [y^b, x] = [y, x]^{y^{b-1}} [y^{b-1}, x]  =>  coord = sum_{j<b} y^j
    Series cb = Series::zero(Chart::R, A.params());
    for (int j = 0; j < b; ++j) cb = cb + pow_series(A, 0, j);
    // [y^b, x^a] = [y^b, x] [y^b, x^{a-1}]^x  =>  coord = cb * sum_{i<a} x^i
    Series out = Series::zero(Chart::R, A.params());
    for (int i = 0; i < a; ++i) out = out + cb * pow_series(A, i, 0);
    return out;
}

// ---- elementary word model of the centre-by-metabelian group ---------------
//
// Words in the atoms x^{+-1}, y^{+-1}, u(r), z(w) are normalized with only the
// elementary relations:
//   y x   = x y u(1)             y x^{-1} = x^{-1} y u(-x^{-1})
//   y^{-1} x = x y^{-1} u(-y^{-1})   y^{-1} x^{-1} = x^{-1} y^{-1} u(x^{-1} y^{-1})
//   u(r) x^{e} = x^{e} u(r x^e) z(c_x(r X_e))
//   u(r) y^{e} = y^{e} u(r y^e)
//   u(r) u(s) = u(r+s) z(beta(r,s))
// and central z.  This is independent of the closed-form collection
// corrections used by cbm_mul.

struct Atom {
    int kind; // 0 = x^e, 1 = y^e, 2 = u(r)
    int e = 0;
    Series r;
};

CbmElem word_normalize(const Algebra& A, std::vector<Atom> w) {
    const Params& par = A.params();
    Series wsum = Series::zero(Chart::R, par);
    auto order = [](const Atom& g) { return g.kind; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            Atom& g = w[i];
            Atom& h = w[i + 1];
            if (order(g) <= order(h) && !(g.kind == 2 && h.kind == 2)) continue;
            changed = true;
            if (g.kind == 1 && h.kind == 0) {
                // y^e x^f -> x^f y^e u(corr)
                Series corr;
                if (g.e == 1 && h.e == 1) corr = Series::constant(Chart::R, par, 1);
                if (g.e == 1 && h.e == -1) corr = -pow_series(A, -1, 0);
                if (g.e == -1 && h.e == 1) corr = -pow_series(A, 0, -1);
                if (g.e == -1 && h.e == -1) corr = pow_series(A, -1, -1);
                Atom nx{0, h.e, {}}, ny{1, g.e, {}}, nu{2, 0, corr};
                w[i] = nx;
                w[i + 1] = ny;
                w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, nu);
            } else if (g.kind == 2 && h.kind != 2) {
                // u(r) x^e or u(r) y^e
                Series moved = g.r * pow_series(A, h.kind == 0 ? h.e : 0, h.kind == 1 ? h.e : 0);
                if (h.kind == 0) {
                    // X_{+1} = 1, X_{-1} = -x^{-1}
                    Series xe = h.e == 1 ? Series::constant(Chart::R, par, 1) : -pow_series(A, -1, 0);
                    wsum = wsum + cbm_detail::conj_corr_x(A, g.r * xe);
                }
                Atom nu{2, 0, moved};
                Atom nh = h;
                w[i] = nh;
                w[i + 1] = nu;
            } else if (g.kind == 2 && h.kind == 2) {
                wsum = wsum + cbm_detail::cocycle(A, g.r, h.r);
                g.r = g.r + h.r;
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            }
        }
    }
    int a = 0, b = 0;
    Series r = Series::zero(Chart::R, par);
    for (const Atom& g : w) {
        if (g.kind == 0) a += g.e;
        if (g.kind == 1) b += g.e;
        if (g.kind == 2) r = r + g.r;
    }
    CbmElem out = cbm_make(A, a, b, r, wsum);
    return out;
}

std::vector<Atom> word_of(const Algebra& A, int a, int b, const Series& r, const Series& w) {
    std::vector<Atom> out;
    for (int i = 0; i < (a >= 0 ? a : -a); ++i) out.push_back(Atom{0, a >= 0 ? 1 : -1, {}});
    for (int i = 0; i < (b >= 0 ? b : -b); ++i) out.push_back(Atom{1, b >= 0 ? 1 : -1, {}});
    out.push_back(Atom{2, 0, r});
    (void)w; // central part handled by the caller
    return out;
}

CbmElem word_mul(const Algebra& A, int a1, int b1, const Series& r1, const Series& w1, int a2,
                 int b2, const Series& r2, const Series& w2) {
    std::vector<Atom> w = word_of(A, a1, b1, r1, w1);
    std::vector<Atom> tail = word_of(A, a2, b2, r2, w2);
    w.insert(w.end(), tail.begin(), tail.end());
    CbmElem out = word_normalize(A, w);
    out.w = out.w + w1 + w2;
    return out;
}

} // namespace

TEST_CASE("phi examples") {
    Params par = P();
    Algebra A(par);
    auto E = [&](std::int64_t v) { return PadicInt::exponent(par, v); };
    CHECK(format_series(phi_series(A, E(1), E(1))) == "1");
    CHECK(format_series(phi_series(A, E(2), E(1))) == "2 + 1*xi");
    CHECK(phi_series(A, E(7), E(0)).is_zero());
}

TEST_CASE("metab examples") {
    Params par = P();
    Algebra A(par);
    Series zero = Series::zero(Chart::R, par);
    MetabElem g = metab_mul(A, metab_make(A, 1, 1, zero), metab_make(A, 1, 0, zero));
    CHECK(g.a.v == 2);
    CHECK(g.b.v == 1);
    CHECK(eq_below(g.r, Series::constant(Chart::R, par, 1)));
    MetabElem h = metab_make(A, -2, 3, zero);
    CHECK(metab_eq(metab_mul(A, h, metab_identity(A)), h));
    CHECK(metab_eq(metab_mul(A, h, metab_inv(A, h)), metab_identity(A)));
}

TEST_CASE("metab commutators against the iterated oracle") {
    Params par = P();
    Algebra A(par);
    Series zero = Series::zero(Chart::R, par);
    MetabElem u = metab_comm(A, metab_make(A, 0, 1, zero), metab_make(A, 1, 0, zero));
    CHECK(u.a.v == 0);
    CHECK(u.b.v == 0);
    CHECK(eq_below(u.r, Series::constant(Chart::R, par, 1)));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            MetabElem c = metab_comm(A, metab_make(A, 0, b, zero), metab_make(A, a, 0, zero));
            Series oracle = oracle_comm_coord(A, a, b);
            CHECK(c.a.v == 0);
            CHECK(c.b.v == 0);
            CHECK(eq_below(c.r, oracle));
            CHECK(eq_below(phi_series(A, PadicInt::exponent(par, a), PadicInt::exponent(par, b)),
                           oracle));
        }
    // [y^2, x^3] coordinate equals phi(3, 2)
    MetabElem c23 = metab_comm(A, metab_make(A, 0, 2, zero), metab_make(A, 3, 0, zero));
    CHECK(eq_below(c23.r, phi_series(A, PadicInt::exponent(par, 3), PadicInt::exponent(par, 2))));
}

TEST_CASE("metab conjugation is the module action on coordinates") {
    Params par = P();
    Algebra A(par);
    Rng rng(22);
    for (int t = 0; t < 30; ++t) {
        GroupElt g = random_group_elt(par, rng);
        CHECK(g.compose(g.inverse()).is_identity());
        MetabElem v = metab_make(A, 0, 0, rnd_r(A, rng));
        MetabElem w = metab_make(A, 0, 0, rnd_r(A, rng));
        MetabElem cv = metab_conj(A, v, g);
        CHECK(cv.a.v == 0);
        CHECK(cv.b.v == 0);
        CHECK(eq_below(cv.r, v.r * A.group_elt_series(g)));
        CHECK(metab_eq(metab_conj(A, metab_mul(A, v, w), g),
                       metab_mul(A, metab_conj(A, v, g), metab_conj(A, w, g))));
    }
}

TEST_CASE("metab associativity on random triples") {
    Params par = P();
    Algebra A(par);
    Rng rng(21);
    for (int t = 0; t < 60; ++t) {
        MetabElem g = metab_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng));
        MetabElem h = metab_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng));
        MetabElem k = metab_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng));
        CHECK(metab_eq(metab_mul(A, metab_mul(A, g, h), k), metab_mul(A, g, metab_mul(A, h, k))));
        CHECK(metab_eq(metab_mul(A, metab_inv(A, g), g), metab_identity(A)));
    }
}

TEST_CASE("section corrections land in the antisymmetric part") {
    Params par = P();
    Algebra A(par);
    Rng rng(19);
    auto E = [&](std::int64_t v) { return PadicInt::exponent(par, v); };
    for (int t = 0; t < 20; ++t) {
        Series r = rnd_r(A, rng), s = rnd_r(A, rng);
        Series c = cbm_detail::cocycle(A, r, s);
        CHECK(eq_below(A.star(c), -c));
        Series cx = cbm_detail::conj_corr_x(A, r);
        CHECK(eq_below(A.star(cx), -cx, cx.validity));
        Series dl = cbm_detail::collect_corr(A, E(rng.range(-9, 9)), E(rng.range(-9, 9)));
        CHECK(eq_below(A.star(dl), -dl, dl.validity));
    }
    CHECK_THROWS_AS(cbm_make(A, 0, 0, Series::zero(Chart::R, par),
                             Series::variable(Chart::R, par, 0)),
                    precondition_error);
}

TEST_CASE("collection corrections satisfy the commutator recursions") {
    Params par = P();
    Algebra A(par);
    auto E = [&](std::int64_t v) { return PadicInt::exponent(par, v); };
    auto beta = [&](const Series& r, const Series& s) { return cbm_detail::cocycle(A, r, s); };
    for (int alpha = 0; alpha <= 4; ++alpha) {
        // delta(alpha+1, 1) = delta(alpha, 1) + beta(1, X_alpha x)
        Series lhs = cbm_detail::collect_corr(A, E(alpha + 1), E(1));
        Series rhs = cbm_detail::collect_corr(A, E(alpha), E(1)) +
                     beta(Series::constant(Chart::R, par, 1), xgeom(A, E(alpha)) * pow_series(A, 1, 0));
        CHECK(eq_below(lhs, rhs, par.maxdeg - 2));
        for (int b = 0; b <= 4; ++b) {
            // delta(alpha, b+1) = delta(alpha, b) + delta(alpha, 1) + beta(X_alpha y^b, X_alpha Y_b)
            Series l2 = cbm_detail::collect_corr(A, E(alpha), E(b + 1));
            Series r2 = cbm_detail::collect_corr(A, E(alpha), E(b)) +
                        cbm_detail::collect_corr(A, E(alpha), E(1)) +
                        beta(xgeom(A, E(alpha)) * pow_series(A, 0, b),
                             xgeom(A, E(alpha)) * ygeom(A, E(b)));
            CHECK(eq_below(l2, r2, par.maxdeg - 2));
        }
    }
}

TEST_CASE("cbm multiplication matches the elementary word model") {
    Params par = P();
    Algebra A(par);
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        int a1 = static_cast<int>(rng.range(-3, 3)), b1 = static_cast<int>(rng.range(-3, 3));
        int a2 = static_cast<int>(rng.range(-3, 3)), b2 = static_cast<int>(rng.range(-3, 3));
        Series r1 = rnd_r(A, rng), r2 = rnd_r(A, rng);
        Series w1 = rnd_minus(A, rng), w2 = rnd_minus(A, rng);
        CbmElem fast = cbm_mul(A, cbm_make(A, a1, b1, r1, w1), cbm_make(A, a2, b2, r2, w2));
        CbmElem slow = word_mul(A, a1, b1, r1, w1, a2, b2, r2, w2);
        CHECK(fast.a == slow.a);
        CHECK(fast.b == slow.b);
        CHECK(eq_below(fast.r, slow.r));
        CHECK(eq_below(fast.w, slow.w, par.maxdeg - 2));
    }
}

TEST_CASE("cbm group laws") {
    Params par = P();
    Algebra A(par);
    Rng rng(25);
    for (int t = 0; t < 40; ++t) {
        CbmElem g = cbm_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng), rnd_minus(A, rng));
        CbmElem h = cbm_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng), rnd_minus(A, rng));
        CbmElem k = cbm_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng), rnd_minus(A, rng));
        CHECK(cbm_eq(cbm_mul(A, cbm_mul(A, g, h), k), cbm_mul(A, g, cbm_mul(A, h, k))));
        CHECK(cbm_eq(cbm_mul(A, g, cbm_inv(A, g)), cbm_identity(A)));
        CHECK(cbm_eq(cbm_mul(A, cbm_inv(A, g), g), cbm_identity(A)));
    }
}

TEST_CASE("cbm commutator of lifts is the bracket") {
    Params par = P();
    Algebra A(par);
    Rng rng(27);
    Series xi = Series::variable(Chart::R, par, 0);
    CbmElem c = cbm_comm(A, cbm_uhat(A, Series::constant(Chart::R, par, 1)), cbm_uhat(A, xi));
    CHECK(c.r.is_zero());
    CHECK(eq_below(c.w, A.star(xi) - xi));
    for (int t = 0; t < 40; ++t) {
        Series r = rnd_r(A, rng), s = rnd_r(A, rng);
        CbmElem cc = cbm_comm(A, cbm_uhat(A, r), cbm_uhat(A, s));
        CHECK(cc.a.v == 0);
        CHECK(cc.b.v == 0);
        CHECK(cc.r.is_zero());
        CHECK(eq_below(cc.w, A.pairing_pi(r, s)));
        CHECK(cbm_eq(cbm_comm(A, cbm_uhat(A, r), cbm_uhat(A, r)), cbm_identity(A)));
    }
}

TEST_CASE("cbm conjugation") {
    Params par = P();
    Algebra A(par);
    CbmElem u = cbm_uhat(A, Series::constant(Chart::R, par, 1));
    CbmElem ux = cbm_conj(A, u, GroupElt::make(par, 1, 0));
    CHECK(ux.a.v == 0);
    CHECK(ux.b.v == 0);
    CHECK(eq_below(ux.r, pow_series(A, 1, 0)));
    CHECK(ux.w.is_zero()); // r = 1 has no eta-part, so no central correction
    Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        GroupElt g = random_group_elt(par, rng);
        CbmElem v = cbm_uhat(A, rnd_r(A, rng));
        CbmElem w = cbm_uhat(A, rnd_r(A, rng));
        CHECK(cbm_eq(cbm_conj(A, cbm_mul(A, v, w), g),
                     cbm_mul(A, cbm_conj(A, v, g), cbm_conj(A, w, g))));
        CHECK(eq_below(cbm_conj(A, v, g).r, v.r * A.group_elt_series(g), par.maxdeg));
    }
}

TEST_CASE("cbm centre") {
    Params par = P();
    Algebra A(par);
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        CbmElem g = cbm_make(A, rng.range(-9, 9), rng.range(-9, 9), rnd_r(A, rng), rnd_minus(A, rng));
        CbmElem z = cbm_central(A, rnd_minus(A, rng));
        CHECK(cbm_eq(cbm_mul(A, z, g), cbm_mul(A, g, z)));
    }
    // an element with unit-lead module coordinate is not central
    CbmElem v = cbm_uhat(A, Series::constant(Chart::R, par, 1) + Series::variable(Chart::R, par, 0));
    CbmElem x = cbm_of_group(A, GroupElt::make(par, 1, 0));
    CHECK(!cbm_eq(cbm_mul(A, v, x), cbm_mul(A, x, v)));
}

TEST_CASE("membership classification") {
    Params par = P();
    Algebra A(par);
    CHECK(membership_CN(A, cbm_uhat(A, Series::constant(Chart::R, par, 1))) == CNClass::C);
    Series xmix = pow_series(A, 1, 0) - pow_series(A, -1, 0);
    CHECK(membership_CN(A, cbm_uhat(A, xmix)) == CNClass::N);
    Series xi = Series::variable(Chart::R, par, 0);
    CHECK(membership_CN(A, cbm_central(A, xi - A.star(xi))) == CNClass::Both);
    CHECK(membership_CN(A, cbm_uhat(A, xi)) == CNClass::Neither);
    CHECK_THROWS_AS(membership_CN(A, cbm_of_group(A, GroupElt::make(par, 1, 0))),
                    precondition_error);
}

TEST_CASE("centralizer dichotomy") {
    Params par = P();
    Algebra A(par);
    Series one = Series::constant(Chart::R, par, 1);
    Series xi = Series::variable(Chart::R, par, 0);
    // r = 1 in R+, s symmetric: pairing vanishes
    CentralizerReport rep = centralizer_check(A, one, xi + A.star(xi));
    CHECK(rep.r_in_plus);
    CHECK(rep.ok);
    CHECK(A.pairing_pi(one, xi + A.star(xi)).is_zero());
    // r = 1, s = xi: pairing is xi* - xi, nonzero at degree 1
    CentralizerReport rep2 = centralizer_check(A, one, xi);
    CHECK(rep2.ok);
    CHECK(!A.pairing_pi(one, xi).is_zero());
    // r = x - x^{-1} in R-, s in R-
    Series rm = pow_series(A, 1, 0) - pow_series(A, -1, 0);
    Series sm = xi - A.star(xi);
    CentralizerReport rep3 = centralizer_check(A, rm, sm);
    CHECK(!rep3.r_in_plus);
    CHECK(rep3.ok);
    CHECK(A.pairing_pi(rm, sm).is_zero());
    CHECK_THROWS_AS(centralizer_check(A, xi, xi), precondition_error);
    CHECK_THROWS_AS(centralizer_check(A, scale(one, par.p) + A.star(scale(one, par.p)), xi),
                    precondition_error);
}

TEST_CASE("prof hypotheses") {
    Params par = P();
    Algebra A(par);
    ProfReport rep = prof_hypotheses_check(A, 4);
    CHECK(rep.quotient_nonzero);
    CHECK(rep.intersections_zero);
    CHECK(rep.action_injective);
    CHECK_THROWS_AS(prof_hypotheses_check(A, par.maxdeg), precondition_error);
}
