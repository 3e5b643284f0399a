#include "cga/groups.hpp"

namespace cga {

namespace {

Series var_series(const Algebra& A, Chart chart, int var) {
    return Series::variable(chart, A.params(), var);
}

PadicInt as_coeff(const Algebra& A, const PadicInt& e) {
    // reduce a guard-precision exponent to coefficient precision
    return PadicInt::coeff(A.params(), static_cast<std::int64_t>(e.v % A.params().mod_coeff));
}

} // namespace

Series xgeom(const Algebra& A, const PadicInt& a) {
    const Params& par = A.params();
    Series r = Series::zero(Chart::R, par);
    const MonoTable& t = r.table();
    std::array<std::uint8_t, 4> e{};
    for (int j = 1; j <= par.maxdeg; ++j) {
        e[0] = static_cast<std::uint8_t>(j - 1);
        r.c[t.rank_of(e)] = binomial(par, a, j).v;
    }
    return r;
}

Series ygeom(const Algebra& A, const PadicInt& b) {
    const Params& par = A.params();
    Series r = Series::zero(Chart::R, par);
    const MonoTable& t = r.table();
    std::array<std::uint8_t, 4> e{};
    for (int k = 1; k <= par.maxdeg; ++k) {
        e[1] = static_cast<std::uint8_t>(k - 1);
        r.c[t.rank_of(e)] = binomial(par, b, k).v;
    }
    return r;
}

Series phi_series(const Algebra& A, const PadicInt& a, const PadicInt& b) {
    // both factors are exact single-variable polynomials, so the product keeps
    // full validity
    return xgeom(A, a) * ygeom(A, b);
}

MetabElem metab_identity(const Algebra& A) {
    const Params& par = A.params();
    return MetabElem{PadicInt::exponent(par, 0), PadicInt::exponent(par, 0),
                     Series::zero(Chart::R, par)};
}

MetabElem metab_make(const Algebra& A, std::int64_t a, std::int64_t b, const Series& r) {
    const Params& par = A.params();
    return MetabElem{PadicInt::exponent(par, a), PadicInt::exponent(par, b), r};
}

MetabElem metab_mul(const Algebra& A, const MetabElem& g, const MetabElem& h) {
    Series gprime = group_series(A.params(), h.a, h.b);
    Series yprime = group_series(A.params(), PadicInt::exponent(A.params(), 0), h.b);
    Series r = g.r * gprime + phi_series(A, h.a, g.b) * yprime + h.r;
    return MetabElem{g.a + h.a, g.b + h.b, r};
}

MetabElem metab_inv(const Algebra& A, const MetabElem& g) {
    MetabElem cand{-g.a, -g.b, Series::zero(Chart::R, A.params())};
    cand.r = -metab_mul(A, g, cand).r;
    return cand;
}

MetabElem metab_comm(const Algebra& A, const MetabElem& g, const MetabElem& h) {
    return metab_mul(A, metab_mul(A, metab_mul(A, metab_inv(A, g), metab_inv(A, h)), g), h);
}

MetabElem metab_conj(const Algebra& A, const MetabElem& g, const GroupElt& t) {
    MetabElem lift = metab_make(A, 0, 0, Series::zero(Chart::R, A.params()));
    lift.a = t.a;
    lift.b = t.b;
    return metab_mul(A, metab_mul(A, metab_inv(A, lift), g), lift);
}

bool metab_eq(const MetabElem& g, const MetabElem& h, int v) {
    return g.a == h.a && g.b == h.b && eq_below(g.r, h.r, v < 0 ? g.r.par.maxdeg : v);
}

namespace cbm_detail {

Series cocycle(const Algebra& A, const Series& r, const Series& s) {
    return scale(A.pairing_pi(r, s), A.half());
}

Series conj_corr_x(const Algebra& A, const Series& r) {
    // split r = (eta-free part) + eta*s and return s*xy - (s*xy)^*
    Series part = var_part(r, 1);
    if (part.is_zero()) return Series::zero(Chart::R, A.params(), r.validity);
    Series s = divide_var(part, 1);
    const Params& par = A.params();
    Series xy = group_series(par, PadicInt::exponent(par, 1), PadicInt::exponent(par, 1));
    Series t = s * xy;
    return t - A.star(t);
}

Series delta1(const Algebra& A, const PadicInt& alpha) {
    const Params& par = A.params();
    Series x = group_series(par, PadicInt::exponent(par, 1), PadicInt::exponent(par, 0));
    Series xpow = group_series(par, PadicInt::exponent(par, 1) - alpha, PadicInt::exponent(par, 0));
    Series xi = var_series(A, Chart::R, 0);
    // (alpha*xi - x + x^{1-alpha}) / xi^2
    Series num1 = scale(xi, as_coeff(A, alpha)) - x + xpow;
    Series t1 = divide_var(divide_var(num1, 0), 0);
    // x * (X_alpha - alpha) / xi
    Series num2 = xgeom(A, alpha) - Series::constant(Chart::R, par, static_cast<std::int64_t>(as_coeff(A, alpha).v));
    Series t2 = x * divide_var(num2, 0);
    return scale(t1 - t2, A.half());
}

Series dfun(const Algebra& A, const PadicInt& beta) {
    const Params& par = A.params();
    Series y = group_series(par, PadicInt::exponent(par, 0), PadicInt::exponent(par, 1));
    Series ypow = group_series(par, PadicInt::exponent(par, 0), PadicInt::exponent(par, 1) - beta);
    Series eta = var_series(A, Chart::R, 1);
    // y * (Y_beta - beta) / eta
    Series num1 = ygeom(A, beta) - Series::constant(Chart::R, par, static_cast<std::int64_t>(as_coeff(A, beta).v));
    Series t1 = y * divide_var(num1, 1);
    // (beta*eta - y + y^{1-beta}) / eta^2
    Series num2 = scale(eta, as_coeff(A, beta)) - y + ypow;
    Series t2 = divide_var(divide_var(num2, 1), 1);
    return scale(t1 - t2, A.half());
}

Series collect_corr(const Algebra& A, const PadicInt& alpha, const PadicInt& beta) {
    // delta(alpha,beta) = beta*delta1(alpha) + X_alpha X_alpha^* d(beta);
    // identically zero when either exponent vanishes
    if (alpha.v == 0 || beta.v == 0) return Series::zero(Chart::R, A.params());
    Series xa = xgeom(A, alpha);
    return scale(delta1(A, alpha), as_coeff(A, beta)) + xa * A.star(xa) * dfun(A, beta);
}

} // namespace cbm_detail

CbmElem cbm_identity(const Algebra& A) {
    const Params& par = A.params();
    return CbmElem{PadicInt::exponent(par, 0), PadicInt::exponent(par, 0),
                   Series::zero(Chart::R, par), Series::zero(Chart::R, par)};
}

CbmElem cbm_make(const Algebra& A, std::int64_t a, std::int64_t b, const Series& r, const Series& w) {
    if (!A.in_minus(w))
        throw precondition_error("cbm_make: central coordinate must lie in R-");
    const Params& par = A.params();
    return CbmElem{PadicInt::exponent(par, a), PadicInt::exponent(par, b), r, w};
}

CbmElem cbm_uhat(const Algebra& A, const Series& r) {
    CbmElem g = cbm_identity(A);
    g.r = r;
    return g;
}

CbmElem cbm_central(const Algebra& A, const Series& w) {
    return cbm_make(A, 0, 0, Series::zero(Chart::R, A.params()), w);
}

CbmElem cbm_of_group(const Algebra& A, const GroupElt& t) {
    CbmElem g = cbm_identity(A);
    g.a = t.a;
    g.b = t.b;
    return g;
}

CbmElem cbm_mul(const Algebra& A, const CbmElem& g, const CbmElem& h) {
    const Params& par = A.params();
    Series gprime = group_series(par, h.a, h.b);
    Series yprime = group_series(par, PadicInt::exponent(par, 0), h.b);
    Series collect = phi_series(A, h.a, g.b) * yprime; // phi(a',b) * y^{b'}
    Series rg = g.r * gprime;
    Series r = rg + collect + h.r;
    Series w = g.w + h.w + cbm_detail::conj_corr_x(A, g.r * xgeom(A, h.a)) +
               cbm_detail::collect_corr(A, h.a, g.b) + cbm_detail::cocycle(A, collect, rg + h.r) +
               cbm_detail::cocycle(A, rg, h.r);
    return CbmElem{g.a + h.a, g.b + h.b, r, w};
}

CbmElem cbm_inv(const Algebra& A, const CbmElem& g) {
    const Params& par = A.params();
    CbmElem cand{-g.a, -g.b, Series::zero(Chart::R, par), Series::zero(Chart::R, par)};
    cand.r = -cbm_mul(A, g, cand).r;
    cand.w = -cbm_mul(A, g, cand).w;
    return cand;
}

CbmElem cbm_comm(const Algebra& A, const CbmElem& g, const CbmElem& h) {
    return cbm_mul(A, cbm_mul(A, cbm_mul(A, cbm_inv(A, g), cbm_inv(A, h)), g), h);
}

CbmElem cbm_conj(const Algebra& A, const CbmElem& g, const GroupElt& t) {
    CbmElem lift = cbm_of_group(A, t);
    return cbm_mul(A, cbm_mul(A, cbm_inv(A, lift), g), lift);
}

bool cbm_eq(const CbmElem& g, const CbmElem& h, int v) {
    int bound = v < 0 ? g.r.par.maxdeg : v;
    return g.a == h.a && g.b == h.b && eq_below(g.r, h.r, bound) && eq_below(g.w, h.w, bound);
}

CNClass membership_CN(const Algebra& A, const CbmElem& g) {
    if (g.a.v != 0 || g.b.v != 0)
        throw precondition_error("membership_CN: element is not in the D-model");
    bool plus = A.in_plus(g.r);
    bool minus = A.in_minus(g.r);
    if (plus && minus) return CNClass::Both; // r = 0 below validity
    if (plus) return CNClass::C;
    if (minus) return CNClass::N;
    return CNClass::Neither;
}

CentralizerReport centralizer_check(const Algebra& A, const Series& r, const Series& s) {
    CentralizerReport rep;
    bool plus = A.in_plus(r);
    bool minus = A.in_minus(r);
    if (r.is_zero() || (!plus && !minus))
        throw precondition_error("centralizer_check: r must be a nonzero element of R+ or R-");
    int low = r.low_degree();
    // unit lowest coefficient guard against truncated zero-divisors
    const MonoTable& t = r.table();
    for (std::size_t i = 0; i < t.count_below(r.validity); ++i) {
        if (!r.c[i]) continue;
        if (r.c[i] % static_cast<std::uint64_t>(A.params().p) == 0)
            throw precondition_error("centralizer_check: lowest coefficient of r is not a unit");
        break;
    }
    rep.r_in_plus = plus;
    Series st = A.star(s);
    Series defect = plus ? st - s : st + s;
    Series lhs = A.pairing_pi(r, s);
    rep.product_form = eq_below(lhs, r * defect, lhs.validity);
    bool pairing_zero = is_zero_below(lhs, lhs.validity);
    bool sym_zero = is_zero_below(defect, defect.validity - low);
    rep.vanish_iff_sym = pairing_zero == sym_zero;
    rep.ok = rep.product_form && rep.vanish_iff_sym;
    return rep;
}

ProfReport prof_hypotheses_check(const Algebra& A, int d) {
    const Params& par = A.params();
    if (d > par.maxdeg - 1) throw precondition_error("prof_hypotheses_check: d above maxdeg-1");
    ProfReport rep;

    // (1) the antisymmetric part modulo p and modulo Delta(1-gamma) is nonzero
    const MonoTable& t = MonoTable::get(4, par.maxdeg);
    Series zeta_a = A.to_chart(var_series(A, Chart::SB, kZeta), Chart::SA);
    Series tau_a = A.to_chart(var_series(A, Chart::SB, kTau), Chart::SA);
    FpMat w(static_cast<std::uint64_t>(par.p), 0, t.count_below(d));
    std::size_t nm = t.count_below(d - 1 > 0 ? d - 1 : 0);
    for (std::uint32_t i = 0; i < nm; ++i) {
        Series m = Series::zero(Chart::SA, par);
        m.c[i] = 1;
        for (const Series* gen : {&zeta_a, &tau_a}) {
            Series row = A.antisym(m * *gen);
            row.truncate_to(d);
            std::vector<std::uint64_t> v(t.count_below(d));
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = row.c[j] % static_cast<std::uint64_t>(par.p);
            w.append_row(v);
        }
    }
    std::size_t antisym_dim = oracle::antisym_pairs(A, d).size();
    rep.quotient_nonzero = w.rank() < antisym_dim;

    // (2) finite-sample intersection, the xy^j family
    std::vector<GroupElt> sample;
    for (int j = 0; j <= d; ++j) sample.push_back(GroupElt::make(par, 1, j));
    rep.intersections_zero = intersection_dim(A, sample, d) == 0;

    // (3) injectivity of the action for a sample of g
    rep.action_injective = injectivity_rank(A, GroupElt::make(par, 1, 0), d) &&
                           injectivity_rank(A, GroupElt::make(par, 0, 1), d) &&
                           injectivity_rank(A, GroupElt::make(par, 1, 1), d);
    return rep;
}

} // namespace cga
