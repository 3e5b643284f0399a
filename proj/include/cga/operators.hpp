#pragma once

#include <utility>
#include <vector>

#include "cga/algebra.hpp"
#include "cga/fpmat.hpp"

namespace cga {

enum class PsiKind { One, Two, Avg };

// Psi_i = (1 - pi_i) zeta^{-1}, with pi_i the projection killing zeta in the
// decomposition S = S(i)[[zeta]]; Avg is (Psi_1 + Psi_2)/2.  Costs one degree
// of validity.  `var` selects the zeta- or tau-version of the calculus.
Series psi_var(const Algebra& A, const Series& s, int var, PsiKind which);
inline Series psi(const Algebra& A, const Series& s, PsiKind which) {
    return psi_var(A, s, kZeta, which);
}

// Given a with a(1-gamma) in S*zeta, an antisymmetric b with b*zeta = a(1-gamma)
// up to validity-1.
Series solve_s_zeta(const Algebra& A, const Series& a);

// Given r with r(1-gamma) in Delta, a pair (c_zeta, c_tau) of antisymmetric
// elements with (c_zeta*zeta + c_tau*tau)(1-gamma) = r(1-gamma) up to validity-2.
std::pair<Series, Series> solve_s_delta(const Algebra& A, const Series& r);

// Given antisymmetric a, b with a*zeta = b*tau, the antisymmetric c with
// a = c*tau and b = c*zeta up to validity-2.
Series cross_witness(const Algebra& A, const Series& a, const Series& b);

// Linear-algebra oracles mod p on the antisymmetric part in degrees < d.
int intersection_dim(const Algebra& A, const std::vector<GroupElt>& sample, int d);
bool injectivity_rank(const Algebra& A, const GroupElt& g, int d);

namespace oracle {

// basis of the antisymmetric subspace: pairs (i, gamma(i)) of monomial ranks
// with degree < d, i < gamma(i); chart SA
std::vector<std::pair<std::uint32_t, std::uint32_t>> antisym_pairs(const Algebra& A, int d);

// row vector (length = #monomials of degree < out_deg) of h * (m_i - m_{gi}) mod p
std::vector<std::uint64_t> image_row(const Algebra& A, const Series& h, std::uint32_t i,
                                     std::uint32_t gi, int out_deg);

// matrix whose row space is the image of multiplication by h on the
// antisymmetric part, degrees < d mapped into degrees < out_deg
FpMat image_space(const Algebra& A, const Series& h, int d, int out_deg);

} // namespace oracle

} // namespace cga
