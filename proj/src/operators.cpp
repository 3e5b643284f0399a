#include "cga/operators.hpp"

namespace cga {

namespace {

Series psi_one(const Series& b, int var) {
    // b in chart SB; the var-free part of chart B spans S(1), so pi_1 just
    // drops the var-divisible monomials
    return divide_var(var_part(b, var), var);
}

} // namespace

Series psi_var(const Algebra& A, const Series& s, int var, PsiKind which) {
    if (var != kZeta && var != kTau) throw precondition_error("psi: var must be zeta or tau");
    if (s.validity < 2) throw precondition_error("psi: validity underflow");
    Series b = A.to_chart(s, Chart::SB);
    Series out = Series::zero(Chart::SB, A.params(), b.validity - 1);
    switch (which) {
        case PsiKind::One: out = psi_one(b, var); break;
        case PsiKind::Two: out = A.gamma(psi_one(A.gamma(b), var)); break;
        case PsiKind::Avg: {
            Series one = psi_one(b, var);
            Series two = A.gamma(psi_one(A.gamma(b), var));
            out = scale(one + two, A.half());
            break;
        }
    }
    return s.chart == Chart::SB ? out : A.to_chart(out, s.chart);
}

Series solve_s_zeta(const Algebra& A, const Series& a) {
    Series b = A.to_chart(a, Chart::SB);
    if (!A.ideal_member(A.antisym(b), IdealKind::SZeta))
        throw precondition_error("solve_s_zeta: a(1-gamma) is not in S*zeta");
    return A.antisym(psi_var(A, b, kZeta, PsiKind::Avg));
}

std::pair<Series, Series> solve_s_delta(const Algebra& A, const Series& r) {
    Series rb = A.to_chart(r, Chart::SB);
    if (!A.ideal_member(A.antisym(rb), IdealKind::Delta))
        throw precondition_error("solve_s_delta: r(1-gamma) is not in Delta");
    if (rb.validity < 3) throw precondition_error("solve_s_delta: validity underflow");

    // step 1: in S/(S*tau), where gamma descends to kill_tau . gamma
    auto gbar = [&](const Series& q) { return kill_var(A.gamma(q), kTau); };
    Series rbar = kill_var(rb, kTau);
    Series q1 = psi_one(rbar, kZeta);
    Series q2 = gbar(psi_one(gbar(rbar), kZeta));
    Series qavg = scale(q1 + q2, A.half());
    Series c_zeta = scale(qavg - gbar(qavg), A.half());

    // step 2: the tau-version of the lemma on the full ring
    Series e = rb - c_zeta * Series::variable(Chart::SB, A.params(), kZeta);
    Series t = psi_var(A, e, kTau, PsiKind::Avg);
    Series c_tau = scale(t - A.gamma(t), A.half());
    return {c_zeta, c_tau};
}

Series cross_witness(const Algebra& A, const Series& a, const Series& b) {
    Series ab = A.to_chart(a, Chart::SB);
    Series bb = A.to_chart(b, Chart::SB);
    if (!eq_below(A.gamma(ab), -ab, ab.validity) || !eq_below(A.gamma(bb), -bb, bb.validity))
        throw precondition_error("cross_witness: inputs must be antisymmetric");
    Series az = ab * Series::variable(Chart::SB, A.params(), kZeta);
    Series bt = bb * Series::variable(Chart::SB, A.params(), kTau);
    if (!eq_below(az, bt, std::min(az.validity, bt.validity)))
        throw precondition_error("cross_witness: a*zeta != b*tau");
    if (!A.ideal_member(az, IdealKind::SZetaTau))
        throw precondition_error("cross_witness: product is not in S*zeta*tau");
    return divide_var(divide_var(az, kZeta), kTau);
}

namespace oracle {

std::vector<std::pair<std::uint32_t, std::uint32_t>> antisym_pairs(const Algebra& A, int d) {
    const MonoTable& t = MonoTable::get(4, A.params().maxdeg);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::size_t n = t.count_below(d);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::array<std::uint8_t, 4> e = t.expo[i];
        std::swap(e[0], e[2]);
        std::swap(e[1], e[3]);
        std::uint32_t gi = t.rank_of(e);
        if (i < gi) out.emplace_back(i, gi);
    }
    return out;
}

std::vector<std::uint64_t> image_row(const Algebra& A, const Series& h, std::uint32_t i,
                                     std::uint32_t gi, int out_deg) {
    const Params& par = A.params();
    const MonoTable& t = MonoTable::get(4, par.maxdeg);
    Series m = Series::zero(Chart::SA, par);
    m.c[i] = 1;
    m.c[gi] = par.mod_coeff - 1;
    Series prod = m * h;
    std::size_t n = t.count_below(out_deg);
    std::vector<std::uint64_t> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = prod.c[j] % static_cast<std::uint64_t>(par.p);
    return row;
}

FpMat image_space(const Algebra& A, const Series& h, int d, int out_deg) {
    const MonoTable& t = MonoTable::get(4, A.params().maxdeg);
    FpMat m(static_cast<std::uint64_t>(A.params().p), 0, t.count_below(out_deg));
    for (auto [i, gi] : antisym_pairs(A, d)) m.append_row(image_row(A, h, i, gi, out_deg));
    m.rref();
    return m;
}

} // namespace oracle

int intersection_dim(const Algebra& A, const std::vector<GroupElt>& sample, int d) {
    if (sample.empty()) throw precondition_error("intersection_dim: empty sample");
    if (d > A.params().maxdeg) throw precondition_error("intersection_dim: d above maxdeg");
    bool first = true;
    FpMat acc;
    for (const GroupElt& g : sample) {
        Series h = A.to_chart(A.hat_series(g), Chart::SA) - Series::constant(Chart::SA, A.params(), 1);
        // images live in the full ring truncation: only the domain is cut at d,
        // so the high-degree tails of g-1 stay visible and cannot fake membership
        FpMat img = oracle::image_space(A, h, d, A.params().maxdeg);
        if (first) {
            acc = img;
            first = false;
        } else {
            acc = rowspace_intersection(acc, img);
        }
        if (acc.nr == 0) break;
    }
    return static_cast<int>(acc.nr);
}

bool injectivity_rank(const Algebra& A, const GroupElt& g, int d) {
    if (g.is_identity()) throw precondition_error("injectivity_rank: identity element");
    if (d > A.params().maxdeg - 1) throw precondition_error("injectivity_rank: d above maxdeg-1");
    Series h = A.to_chart(A.hat_series(g), Chart::SA) - Series::constant(Chart::SA, A.params(), 1);
    auto pairs = oracle::antisym_pairs(A, d);
    const MonoTable& t = MonoTable::get(4, A.params().maxdeg);
    FpMat m(static_cast<std::uint64_t>(A.params().p), 0, t.count_below(d + 1));
    for (auto [i, gi] : pairs) m.append_row(oracle::image_row(A, h, i, gi, d + 1));
    return m.rank() == pairs.size();
}

} // namespace cga
