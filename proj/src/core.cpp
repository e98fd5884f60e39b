#include "conelift/core.hpp"

#include <algorithm>
#include <cassert>

namespace conelift {

TriangularBasis triangularize(const Mat& generators) {
    size_t n = generators.empty() ? 0 : generators[0].size();
    for (const Vec& r : generators) {
        if (r.size() != n)
            throw std::invalid_argument("triangularize: ragged input matrix");
    }
    if (n == 0) throw std::invalid_argument("triangularize: zero-dimensional input");

    Mat rows = generators;
    TriangularBasis tb;
    tb.col_perm.resize(n);
    for (size_t i = 0; i < n; ++i) tb.col_perm[i] = i;

    size_t r = 0;  // current pivot row
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        // find a column (>= col in working order) with a nonzero entry at or below r
        size_t src = col;
        bool found = false;
        for (; src < n && !found; ++src) {
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][src] != 0) { found = true; break; }
            }
            if (found) break;
        }
        if (!found) break;  // all remaining entries zero
        if (src != col) {
            for (Vec& row : rows) std::swap(row[col], row[src]);
            std::swap(tb.col_perm[col], tb.col_perm[src]);
        }

        // gcd elimination in column col, rows r..end
        for (;;) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))
                    best = i;
            }
            assert(best < rows.size());
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                           rows[r][col].get_mpz_t());
                add_scaled(rows[i], -q, rows[r]);
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] < 0) rows[r] = negated(rows[r]);
        ++r;
    }
    rows.resize(r);  // rows below r are zero (dependent input rows)
    tb.rows = std::move(rows);
    return tb;
}

Mat integer_kernel(const Mat& A) {
    size_t n = A.empty() ? 0 : A[0].size();
    if (A.empty())
        throw std::invalid_argument("integer_kernel: matrix has no rows; column count unknown");
    for (const Vec& r : A)
        if (r.size() != n) throw std::invalid_argument("integer_kernel: ragged matrix");
    if (n == 0) throw std::invalid_argument("integer_kernel: zero columns");

    // column-style elimination: track unimodular column operations in U
    Mat M = A;                 // d x n, mutated
    Mat U(n, Vec(n, 0));       // n x n, columns of the transform (stored row-major)
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;

    auto col_swap = [&](size_t a, size_t b) {
        for (Vec& row : M) std::swap(row[a], row[b]);
        for (Vec& row : U) std::swap(row[a], row[b]);
    };
    auto col_addmul = [&](size_t dst, const Int& c, size_t src) {
        for (Vec& row : M) row[dst] += c * row[src];
        for (Vec& row : U) row[dst] += c * row[src];
    };

    size_t r = 0;  // processed columns
    for (size_t i = 0; i < M.size() && r < n; ++i) {
        bool any = false;
        for (size_t c = r; c < n; ++c)
            if (M[i][c] != 0) { any = true; break; }
        if (!any) continue;
        for (;;) {
            size_t best = n;
            for (size_t c = r; c < n; ++c) {
                if (M[i][c] == 0) continue;
                if (best == n || abs(M[i][c]) < abs(M[i][best])) best = c;
            }
            col_swap(r, best);
            bool done = true;
            for (size_t c = r + 1; c < n; ++c) {
                if (M[i][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), M[i][c].get_mpz_t(), M[i][r].get_mpz_t());
                col_addmul(c, -q, r);
                if (M[i][c] != 0) done = false;
            }
            if (done) break;
        }
        ++r;
    }

    // columns r..n-1 of U span the kernel lattice
    Mat basis;
    for (size_t c = r; c < n; ++c) {
        Vec b(n);
        for (size_t i = 0; i < n; ++i) b[i] = U[i][c];
        basis.push_back(std::move(b));
    }
    return basis;
}

Vec project(const Vec& v, size_t j) {
    if (j < 1 || j > v.size())
        throw std::invalid_argument("project: index out of range");
    return Vec(v.begin(), v.begin() + j);
}

bool sign_divides(const Vec& u, const Vec& v, size_t j1) {
    if (u.size() < j1 || v.size() < j1)
        throw std::invalid_argument("sign_divides: dimension mismatch");
    for (size_t i = 0; i + 1 < j1; ++i)
        if (u[i] > v[i]) return false;
    const Int& ul = u[j1 - 1];
    const Int& vl = v[j1 - 1];
    if (sgn(ul) * sgn(vl) < 0) return false;
    return abs(ul) <= abs(vl);
}

bool lattice_member(const TriangularBasis& basis, const Vec& v) {
    if (v.size() != basis.dim())
        throw std::invalid_argument("lattice_member: dimension mismatch");
    Vec w = v;
    for (size_t i = 0; i < basis.rank(); ++i) {
        if (w[i] == 0) continue;
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[i].get_mpz_t(),
                    basis.pivot(i).get_mpz_t());
        if (rem != 0) return false;
        add_scaled(w, -q, basis.rows[i]);
    }
    return is_zero(w);
}

}  // namespace conelift
