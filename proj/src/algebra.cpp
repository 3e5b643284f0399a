#include "cga/algebra.hpp"

namespace cga {

Algebra::Algebra(const Params& par) : par_(par), half_(invert_unit(PadicInt::coeff(par, 2))) {
    // star on R: v -> (1+v)^{-1} - 1
    star_img_.push_back(inv_one_plus_var(Chart::R, par_, 0));
    star_img_.push_back(inv_one_plus_var(Chart::R, par_, 1));

    // chart A -> chart B: xi2 = (1+xi1)^{-1}(1+zeta) - 1 and likewise for eta2
    auto second_var = [&](int first, int diag) {
        Series inv = inv_one_plus_var(Chart::SB, par_, first);
        Series dv = Series::variable(Chart::SB, par_, diag);
        return inv + dv + inv * dv;
    };
    a2b_img_.push_back(Series::variable(Chart::SB, par_, 0));
    a2b_img_.push_back(Series::variable(Chart::SB, par_, 1));
    a2b_img_.push_back(second_var(0, kZeta));
    a2b_img_.push_back(second_var(1, kTau));

    // chart B -> chart A: zeta = xi1 + xi2 + xi1*xi2, tau likewise
    auto diag_var = [&](int v1, int v2) {
        Series s1 = Series::variable(Chart::SA, par_, v1);
        Series s2 = Series::variable(Chart::SA, par_, v2);
        return s1 + s2 + s1 * s2;
    };
    b2a_img_.push_back(Series::variable(Chart::SA, par_, 0));
    b2a_img_.push_back(Series::variable(Chart::SA, par_, 1));
    b2a_img_.push_back(diag_var(0, 2));
    b2a_img_.push_back(diag_var(1, 3));

    // gamma in chart B: fixes zeta and tau, sends xi1 -> (1+xi1)^{-1}(1+zeta)-1
    gammab_img_.push_back(second_var(0, kZeta));
    gammab_img_.push_back(second_var(1, kTau));
    gammab_img_.push_back(Series::variable(Chart::SB, par_, kZeta));
    gammab_img_.push_back(Series::variable(Chart::SB, par_, kTau));
}

Series Algebra::star(const Series& r) const {
    if (r.chart != Chart::R) throw precondition_error("star: R-chart input required");
    return subst(r, star_img_);
}

std::pair<Series, Series> Algebra::split_pm(const Series& r) const {
    Series st = star(r);
    Series plus = scale(r + st, half_);
    Series minus = scale(r - st, half_);
    return {plus, minus};
}

bool Algebra::in_plus(const Series& r) const { return eq_below(star(r), r, r.validity); }

bool Algebra::in_minus(const Series& r) const { return eq_below(star(r), -r, r.validity); }

Series Algebra::embed(EmbedKind k, const Series& r) const {
    if (r.chart != Chart::R) throw precondition_error("embed: R-chart input required");
    switch (k) {
        case EmbedKind::One: return remap(r, Chart::SA, {0, 1, -1, -1});
        case EmbedKind::Two: return remap(r, Chart::SA, {2, 3, -1, -1});
        default: return remap(r, Chart::SB, {kZeta, kTau, -1, -1});
    }
}

Series Algebra::to_chart(const Series& s, Chart target) const {
    if (s.chart == target) return s;
    if (s.chart == Chart::SA && target == Chart::SB) return subst(s, a2b_img_);
    if (s.chart == Chart::SB && target == Chart::SA) return subst(s, b2a_img_);
    throw precondition_error("to_chart: unsupported chart pair");
}

Series Algebra::gamma(const Series& s) const {
    if (s.chart == Chart::SA) return remap(s, Chart::SA, {2, 3, 0, 1});
    if (s.chart == Chart::SB) return subst(s, gammab_img_);
    throw precondition_error("gamma: S-chart input required");
}

Series Algebra::pi(const Series& s) const {
    Series b = to_chart(s, Chart::SB);
    b = kill_var(kill_var(b, kZeta), kTau);
    return remap(b, Chart::R, {0, 1, -1, -1});
}

bool Algebra::ideal_member(const Series& s, IdealKind which) const {
    Series b = to_chart(s, Chart::SB);
    const MonoTable& t = b.table();
    std::size_t n = t.count_below(b.validity);
    for (std::size_t i = 0; i < n; ++i) {
        if (!b.c[i]) continue;
        bool has_z = t.expo[i][kZeta] > 0;
        bool has_t = t.expo[i][kTau] > 0;
        switch (which) {
            case IdealKind::SZeta:
                if (!has_z) return false;
                break;
            case IdealKind::STau:
                if (!has_t) return false;
                break;
            case IdealKind::SZetaTau:
                if (!has_z || !has_t) return false;
                break;
            case IdealKind::Delta:
                if (!has_z && !has_t) return false;
                break;
        }
    }
    return true;
}

Series Algebra::pairing(const Series& r, const Series& s) const {
    return antisym(embed(EmbedKind::One, r) * embed(EmbedKind::Two, s));
}

Series Algebra::pairing_pi(const Series& r, const Series& s) const {
    return r * star(s) - s * star(r);
}

Series Algebra::group_elt_series(const GroupElt& g) const { return group_series(par_, g.a, g.b); }

Series Algebra::hat_series(const GroupElt& g) const {
    return embed(EmbedKind::Hat, group_series(par_, g.a, g.b));
}

} // namespace cga
