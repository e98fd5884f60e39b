#pragma once

#include <cstddef>

#include "conelift/types.hpp"

namespace conelift {

// Lattice generators in upper-triangular form with positive pivots.
// Rows live in "working" column order; col_perm[w] is the original
// input index of working column w.
struct TriangularBasis {
    Mat rows;                      // s rows of dim n, row i zero before column i
    std::vector<size_t> col_perm;  // working -> original

    size_t rank() const { return rows.size(); }
    size_t dim() const { return col_perm.size(); }
    const Int& pivot(size_t i) const { return rows[i][i]; }

    Vec to_original(const Vec& w) const {
        Vec r(dim());
        for (size_t i = 0; i < dim(); ++i) r[col_perm[i]] = w[i];
        return r;
    }
    Vec to_working(const Vec& v) const {
        Vec r(dim());
        for (size_t i = 0; i < dim(); ++i) r[i] = v[col_perm[i]];
        return r;
    }
};

// Integer Gaussian elimination with gcd reduction and column swaps.
// Zero rows are dropped; the integer row span is preserved.
TriangularBasis triangularize(const Mat& generators);

// Lattice basis of {z : Az = 0, z integral}; saturated (rows of a
// unimodular transform), empty for full-column-rank A.
Mat integer_kernel(const Mat& A);

// First j coordinates of v.
Vec project(const Vec& v, size_t j);

// Sign-compatible divisibility on stage j1 = prefix length + 1:
// u[i] <= v[i] for i < j1-1, |u[j1-1]| <= |v[j1-1]|, matching signs.
bool sign_divides(const Vec& u, const Vec& v, size_t j1);

// v (in working order) an integer combination of the basis rows?
bool lattice_member(const TriangularBasis& basis, const Vec& v);

}  // namespace conelift
