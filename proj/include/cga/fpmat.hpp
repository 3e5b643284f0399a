#pragma once

#include <cstdint>
#include <vector>

#include "cga/padic.hpp"

namespace cga {

// Dense matrices over the field with p elements; just enough row reduction for
// the rank and intersection oracles.
struct FpMat {
    std::uint64_t p = 3;
    std::size_t nr = 0, nc = 0;
    std::vector<std::uint64_t> a;

    FpMat() = default;
    FpMat(std::uint64_t p, std::size_t nr, std::size_t nc) : p(p), nr(nr), nc(nc), a(nr * nc, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * nc + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * nc + j]; }

    void append_row(const std::vector<std::uint64_t>& row) {
        a.insert(a.end(), row.begin(), row.end());
        ++nr;
    }

    FpMat transpose() const {
        FpMat t(p, nc, nr);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    static std::uint64_t inv_mod_p(std::uint64_t x, std::uint64_t p) {
        std::uint64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    // in-place reduced row echelon form; returns rank and records pivot columns
    std::size_t rref(std::vector<std::size_t>* pivots = nullptr) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < nc && rank < nr; ++col) {
            std::size_t piv = rank;
            while (piv < nr && at(piv, col) % p == 0) ++piv;
            if (piv == nr) continue;
            for (std::size_t j = 0; j < nc; ++j) std::swap(at(piv, j), at(rank, j));
            std::uint64_t inv = inv_mod_p(at(rank, col) % p, p);
            for (std::size_t j = 0; j < nc; ++j) at(rank, j) = at(rank, j) % p * inv % p;
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == rank) continue;
                std::uint64_t f = at(i, col) % p;
                if (!f) continue;
                for (std::size_t j = 0; j < nc; ++j)
                    at(i, j) = (at(i, j) + (p - f) * at(rank, j)) % p;
            }
            if (pivots) pivots->push_back(col);
            ++rank;
        }
        nr = rank; // drop the zero rows
        a.resize(nr * nc);
        return rank;
    }

    std::size_t rank() const {
        FpMat m = *this;
        return m.rref();
    }

    // basis of { x : M x = 0 }, one row per basis vector (length nc)
    FpMat nullspace() const {
        FpMat m = *this;
        std::vector<std::size_t> pivots;
        m.rref(&pivots);
        std::vector<bool> is_pivot(nc, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        FpMat basis(p, 0, nc);
        for (std::size_t free = 0; free < nc; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::uint64_t> v(nc, 0);
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = (p - m.at(r, free) % p) % p;
            basis.append_row(v);
        }
        return basis;
    }
};

// Basis (as rref rows) of the intersection of the two row spaces.
inline FpMat rowspace_intersection(const FpMat& A, const FpMat& B) {
    FpMat stacked(A.p, 0, A.nc);
    for (std::size_t i = 0; i < A.nr; ++i)
        stacked.append_row(std::vector<std::uint64_t>(A.a.begin() + static_cast<std::ptrdiff_t>(i * A.nc),
                                                      A.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * A.nc)));
    for (std::size_t i = 0; i < B.nr; ++i)
        stacked.append_row(std::vector<std::uint64_t>(B.a.begin() + static_cast<std::ptrdiff_t>(i * B.nc),
                                                      B.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * B.nc)));
    // rows (x | y) of the left nullspace of [A; B] give intersection vectors xA = yB
    FpMat combos = stacked.transpose().nullspace();
    FpMat out(A.p, 0, A.nc);
    for (std::size_t i = 0; i < combos.nr; ++i) {
        std::vector<std::uint64_t> v(A.nc, 0);
        for (std::size_t r = 0; r < A.nr; ++r) {
            std::uint64_t f = combos.at(i, r) % A.p;
            if (!f) continue;
            for (std::size_t j = 0; j < A.nc; ++j) v[j] = (v[j] + f * A.at(r, j)) % A.p;
        }
        out.append_row(v);
    }
    out.rref();
    return out;
}

} // namespace cga
