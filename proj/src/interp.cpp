#include "cga/interp.hpp"

#include "cga/fpmat.hpp"

namespace cga {

Series f_map(const CbmElem& v) {
    if (v.a.v != 0 || v.b.v != 0) throw precondition_error("f_map: element is not in the D-model");
    return v.r;
}

bool rel_add_check(const Algebra& A, const CbmElem& v, const CbmElem& w, const CbmElem& z) {
    Series lhs = f_map(v) + f_map(w);
    Series rhs = f_map(z);
    bool coord = eq_below(lhs, rhs, std::min(lhs.validity, rhs.validity));
    CbmElem g = cbm_mul(A, cbm_mul(A, cbm_inv(A, z), v), w);
    bool group = is_zero_below(g.r, g.r.validity);
    if (coord != group) throw std::logic_error("rel_add_check: sides disagree");
    return coord;
}

StarCheck rel_star_check(const Algebra& A, const CbmElem& w, const CbmElem& z) {
    StarCheck out;
    Series fw = f_map(w), fz = f_map(z);
    out.coord_side = eq_below(fw, A.star(fz), std::min(fw.validity, fz.validity));
    CNClass m1 = membership_CN(A, cbm_mul(A, w, z));
    CNClass m2 = membership_CN(A, cbm_mul(A, w, cbm_inv(A, z)));
    out.group_side = (m1 == CNClass::C || m1 == CNClass::Both) &&
                     (m2 == CNClass::N || m2 == CNClass::Both);
    out.agree = out.coord_side == out.group_side;
    return out;
}

ProductCheck rel_product_check(const Algebra& A, const CbmElem& v, const CbmElem& w,
                               const CbmElem& z, const std::vector<GroupElt>& sample) {
    ProductCheck out;
    Series fv = f_map(v), fw = f_map(w), fz = f_map(z);
    Series prod = fv * A.star(fw);
    out.coord_side = eq_below(fz, prod, std::min(fz.validity, prod.validity));
    CbmElem u = cbm_uhat(A, Series::constant(Chart::R, A.params(), 1));
    out.group_side_all = true;
    for (const GroupElt& g : sample) {
        CbmElem lhs = cbm_comm(A, v, cbm_conj(A, w, g));
        CbmElem rhs = cbm_comm(A, z, cbm_conj(A, u, g));
        if (!cbm_eq(lhs, rhs, std::min(lhs.w.validity, rhs.w.validity))) {
            out.group_side_all = false;
            break;
        }
    }
    return out;
}

int pairing_kernel(const Algebra& A, const std::vector<GroupElt>& sample, int d) {
    const Params& par = A.params();
    if (d > par.maxdeg) throw precondition_error("pairing_kernel: d above maxdeg");
    const MonoTable& t = MonoTable::get(2, par.maxdeg);
    std::size_t n = t.count_below(d);
    // the vanishing conditions are imposed at full validity so that the
    // high-degree part of t g* - g t* is not silently discarded
    std::size_t ncond = t.count_below(par.maxdeg);
    std::vector<Series> gser;
    gser.reserve(sample.size());
    for (const GroupElt& g : sample) gser.push_back(A.group_elt_series(g));
    FpMat m(static_cast<std::uint64_t>(par.p), 0, ncond * sample.size());
    for (std::uint32_t i = 0; i < n; ++i) {
        Series mono = Series::zero(Chart::R, par);
        mono.c[i] = 1;
        std::vector<std::uint64_t> row(ncond * sample.size());
        for (std::size_t k = 0; k < gser.size(); ++k) {
            Series img = A.pairing_pi(mono, gser[k]);
            for (std::size_t j = 0; j < ncond; ++j)
                row[k * ncond + j] = img.c[j] % static_cast<std::uint64_t>(par.p);
        }
        m.append_row(row);
    }
    // kernel of t -> (pairing_pi(t, g))_g is the left nullspace of the row matrix
    return static_cast<int>(m.transpose().nullspace().nr);
}

} // namespace cga
