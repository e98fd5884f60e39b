#include "conelift/oracle.hpp"

#include <algorithm>
#include <set>

#include <functional>

#include "conelift/ratlin.hpp"
#include "conelift/rays.hpp"

namespace conelift {

namespace {

constexpr long kEnumBudget = 10'000'000;

void enumerate_box(const TriangularBasis& basis, size_t depth, Vec& w,
                   const Int& box, long& budget, std::set<Vec>& points) {
    if (depth == basis.rank()) {
        if (--budget < 0) throw resource_error("brute_hilbert: enumeration budget exceeded");
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] < 0 || w[i] > box) return;
        if (!is_zero(w)) points.insert(w);
        return;
    }
    const Int& p = basis.pivot(depth);
    // coordinate at the pivot column must land in [0, box]
    Int cmin, cmax;
    mpz_cdiv_q(cmin.get_mpz_t(), Int(-w[depth]).get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_q(cmax.get_mpz_t(), Int(box - w[depth]).get_mpz_t(), p.get_mpz_t());
    for (Int c = cmin; c <= cmax; ++c) {
        if (--budget < 0) throw resource_error("brute_hilbert: enumeration budget exceeded");
        Vec next = w;
        add_scaled(next, c, basis.rows[depth]);
        enumerate_box(basis, depth + 1, next, box, budget, points);
    }
}

}  // namespace

std::vector<Vec> brute_hilbert(const Mat& generators, const Int& box) {
    TriangularBasis basis = triangularize(generators);
    if (basis.rank() == 0) return {};

    std::set<Vec> points;
    Vec w(basis.dim(), 0);
    long budget = kEnumBudget;
    enumerate_box(basis, 0, w, box, budget, points);

    // a point is non-minimal iff some minimal point lies strictly below
    // it, so scanning in ascending 1-norm only needs the minimal list
    std::vector<Vec> ordered(points.begin(), points.end());
    std::sort(ordered.begin(), ordered.end(), [](const Vec& a, const Vec& b) {
        Int na = norm1(a), nb = norm1(b);
        if (na != nb) return na < nb;
        return lex_less(a, b);
    });
    std::vector<Vec> minimal_w;
    for (const Vec& z : ordered) {
        bool decomposable = false;
        for (const Vec& g : minimal_w)
            if (g != z && leq(g, z)) { decomposable = true; break; }
        if (!decomposable) minimal_w.push_back(z);
    }
    std::vector<Vec> minimal;
    minimal.reserve(minimal_w.size());
    for (const Vec& z : minimal_w) minimal.push_back(basis.to_original(z));
    std::sort(minimal.begin(), minimal.end(), lex_less);
    return minimal;
}

std::vector<Vec> brute_rays(const Mat& generators) {
    TriangularBasis tb = triangularize(generators);
    size_t n = tb.dim();
    size_t s = tb.rank();
    if (n > 12) throw resource_error("brute_rays: dimension guard exceeded");
    if (s == 0) return {};

    Mat B;  // independent span basis in original column order
    for (const Vec& row : tb.rows) B.push_back(tb.to_original(row));

    std::set<Vec> rays;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        // constraints: z_i = 0 outside the candidate support
        Mat M;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1ul << i)) continue;
            Vec row(s);
            for (size_t k = 0; k < s; ++k) row[k] = B[k][i];
            M.push_back(std::move(row));
        }
        Vec coeff;
        if (M.empty()) {
            if (s != 1) continue;
            coeff = Vec{1};
        } else {
            Mat K = rational_kernel(M);
            if (K.size() != 1) continue;
            coeff = K[0];
        }
        Vec z(n, 0);
        for (size_t k = 0; k < s; ++k) add_scaled(z, coeff[k], B[k]);
        if (is_zero(z)) continue;
        bool nonneg = true, nonpos = true;
        for (const Int& x : z) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        if (!nonneg && !nonpos) continue;
        if (nonpos) z = negated(z);
        // support must be exactly the candidate set
        bool exact = true;
        for (size_t i = 0; i < n && exact; ++i) {
            bool in_mask = mask & (1ul << i);
            if ((z[i] != 0) != in_mask) exact = false;
        }
        if (!exact) continue;
        rays.insert(canonicalize_ray(z));
    }
    return std::vector<Vec>(rays.begin(), rays.end());
}

bool check_decomposition(const std::vector<Vec>& H, const Vec& z) {
    if (is_zero(z)) return true;
    std::vector<Vec> sorted = H;
    std::sort(sorted.begin(), sorted.end(), lex_less);

    std::set<Vec> failed;
    std::function<bool(const Vec&)> go = [&](const Vec& rem) -> bool {
        if (is_zero(rem)) return true;
        if (failed.count(rem)) return false;
        for (const Vec& h : sorted) {
            if (is_zero(h) || !leq(h, rem)) continue;
            if (go(sub(rem, h))) return true;
        }
        failed.insert(rem);
        return false;
    };
    return go(z);
}

}  // namespace conelift
