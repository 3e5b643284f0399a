#pragma once

#include <vector>

#include "cga/algebra.hpp"
#include "cga/operators.hpp"

namespace cga {

// Normal form x^a y^b u^r in the free metabelian model: the derived-group part
// is the free cyclic module on u, coordinates in R.
struct MetabElem {
    PadicInt a, b;
    Series r;
};

// Normal form x^a y^b u^r z^w in the centre-by-metabelian model; w lies in the
// antisymmetric part R_- and collects the central coordinate.
struct CbmElem {
    PadicInt a, b;
    Series r, w;
};

enum class CNClass { C, N, Both, Neither };

// (x^a - 1)/(x - 1) = sum_{j>=1} C(a,j) xi^{j-1}; the x-side collection factor.
Series xgeom(const Algebra& A, const PadicInt& a);
Series ygeom(const Algebra& A, const PadicInt& b);

// coordinate of [y^b, x^a] in the derived module: xgeom(a) * ygeom(b)
Series phi_series(const Algebra& A, const PadicInt& a, const PadicInt& b);

MetabElem metab_identity(const Algebra& A);
MetabElem metab_make(const Algebra& A, std::int64_t a, std::int64_t b, const Series& r);
MetabElem metab_mul(const Algebra& A, const MetabElem& g, const MetabElem& h);
MetabElem metab_inv(const Algebra& A, const MetabElem& g);
MetabElem metab_comm(const Algebra& A, const MetabElem& g, const MetabElem& h);
MetabElem metab_conj(const Algebra& A, const MetabElem& g, const GroupElt& t);
bool metab_eq(const MetabElem& g, const MetabElem& h, int v = -1);

// section corrections of the cbm model (exposed for the unit tests)
namespace cbm_detail {
// central correction of conjugation by x: c_x(r) = s*xy - (s*xy)^* where
// r = (xi-only part) + eta*s
Series conj_corr_x(const Algebra& A, const Series& r);
// z-part of [y^beta, x^alpha] relative to u(phi(alpha,beta))
Series collect_corr(const Algebra& A, const PadicInt& alpha, const PadicInt& beta);
Series delta1(const Algebra& A, const PadicInt& alpha); // collect_corr at beta = 1
Series dfun(const Algebra& A, const PadicInt& beta);    // collect_corr at alpha = 1
// beta(r, s) = (r s* - s r*)/2, the alternating cocycle of the central extension
Series cocycle(const Algebra& A, const Series& r, const Series& s);
} // namespace cbm_detail

CbmElem cbm_identity(const Algebra& A);
CbmElem cbm_make(const Algebra& A, std::int64_t a, std::int64_t b, const Series& r, const Series& w);
CbmElem cbm_uhat(const Algebra& A, const Series& r);    // (0,0,r,0)
CbmElem cbm_central(const Algebra& A, const Series& w); // (0,0,0,w)
CbmElem cbm_of_group(const Algebra& A, const GroupElt& t);
CbmElem cbm_mul(const Algebra& A, const CbmElem& g, const CbmElem& h);
CbmElem cbm_inv(const Algebra& A, const CbmElem& g);
CbmElem cbm_comm(const Algebra& A, const CbmElem& g, const CbmElem& h);
CbmElem cbm_conj(const Algebra& A, const CbmElem& g, const GroupElt& t);
bool cbm_eq(const CbmElem& g, const CbmElem& h, int v = -1);

// classification of a D-model element by its module coordinate
CNClass membership_CN(const Algebra& A, const CbmElem& g);

struct CentralizerReport {
    bool r_in_plus = false;       // side of the dichotomy that applies
    bool product_form = false;    // pairing_pi(r,s) equals r*(s* -/+ s)
    bool vanish_iff_sym = false;  // pairing vanishes exactly when s is on the same side
    bool ok = false;
};
CentralizerReport centralizer_check(const Algebra& A, const Series& r, const Series& s);

struct ProfReport {
    bool quotient_nonzero = false;   // pM + M(G-1) != M proxy
    bool intersections_zero = false; // finite-sample intersection oracle
    bool action_injective = false;   // multiplication by g-1 injective, sample g
};
ProfReport prof_hypotheses_check(const Algebra& A, int d);

} // namespace cga
