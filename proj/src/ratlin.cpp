#include "conelift/ratlin.hpp"

#include <cassert>

namespace conelift {

namespace {

// row echelon form in place; returns pivot column per pivot row
std::vector<size_t> echelon(RatMat& M) {
    std::vector<size_t> pivots;
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[r], M[p]);
        Rat inv = 1 / M[r][c];
        for (size_t k = c; k < cols; ++k) M[r][k] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (size_t k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMat to_rat(const Mat& A) {
    RatMat M(A.size());
    for (size_t i = 0; i < A.size(); ++i) {
        M[i].reserve(A[i].size());
        for (const Int& x : A[i]) M[i].emplace_back(x);
    }
    return M;
}

}  // namespace

size_t rational_rank(const Mat& A) {
    RatMat M = to_rat(A);
    return echelon(M).size();
}

Mat rational_kernel(const Mat& A) {
    size_t cols = A.empty() ? 0 : A[0].size();
    RatMat M = to_rat(A);
    std::vector<size_t> pivots = echelon(M);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    Mat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(cols, Rat(0));
        x[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -M[i][free];
        basis.push_back(primitive_integer(x));
    }
    return basis;
}

RatVec rational_solve(const Mat& A, const Vec& b) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows)
        throw std::invalid_argument("rational_solve: dimension mismatch");
    RatMat M = to_rat(A);
    for (size_t i = 0; i < rows; ++i) M[i].emplace_back(b[i]);
    std::vector<size_t> pivots = echelon(M);
    // pivot in the appended column means inconsistent
    for (size_t c : pivots)
        if (c == cols) throw degeneracy_error("rational_solve: inconsistent system");
    if (pivots.size() < cols)
        throw degeneracy_error("rational_solve: solution not unique");
    // full column rank and consistent: pivots are exactly columns 0..cols-1
    RatVec x(cols);
    for (size_t i = 0; i < cols; ++i) x[i] = M[i][cols];
    return x;
}

Vec primitive_integer(const RatVec& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = lcm(lcm_den, Int(x.get_den()));
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat y = v[i] * lcm_den;
        assert(y.get_den() == 1);
        w[i] = y.get_num();
    }
    Int g = vec_gcd(w);
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

}  // namespace conelift
