#pragma once

#include <vector>

#include "cga/groups.hpp"

namespace cga {

// Coordinate map of the D-model: reads off the module coordinate.  Constant on
// central cosets; defined only for a = b = 0.
Series f_map(const CbmElem& v);

// f(v) + f(w) = f(z), cross-checked against the group-side condition that
// z^{-1} v w has zero module coordinate.
bool rel_add_check(const Algebra& A, const CbmElem& v, const CbmElem& w, const CbmElem& z);

struct StarCheck {
    bool coord_side = false; // f(w) = f(z)^*
    bool group_side = false; // wz in C and w z^{-1} in N
    bool agree = false;
};
StarCheck rel_star_check(const Algebra& A, const CbmElem& w, const CbmElem& z);

struct ProductCheck {
    bool coord_side = false;     // f(z) = f(v) f(w)^*
    bool group_side_all = false; // [v, w^g] = [z, u^g] for every sampled g
};
ProductCheck rel_product_check(const Algebra& A, const CbmElem& v, const CbmElem& w,
                               const CbmElem& z, const std::vector<GroupElt>& sample);

// dim over F_p, in degrees < d, of { t : t g* - g t* = 0 for all sampled g }
int pairing_kernel(const Algebra& A, const std::vector<GroupElt>& sample, int d);

} // namespace cga
