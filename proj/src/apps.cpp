#include "conelift/apps.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "conelift/ratlin.hpp"
#include "conelift/rays.hpp"

namespace conelift {

Vec Decomposition::sum(size_t n) const {
    Vec total(n, 0);
    for (const auto& [v, mult] : terms) add_scaled(total, mult, v);
    return total;
}

namespace {

Vec mat_apply(const Mat& A, const Vec& x) {
    Vec y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t k = 0; k < x.size(); ++k) y[i] += A[i][k] * x[k];
    return y;
}

}  // namespace

Decomposition decompose(const Mat& A, const Vec& u) {
    size_t n = A.empty() ? u.size() : A[0].size();
    if (u.size() != n) throw std::invalid_argument("decompose: dimension mismatch");
    for (const Int& x : u)
        if (x < 0) throw std::invalid_argument("decompose: target not nonnegative");
    if (!is_zero(mat_apply(A, u)))
        throw std::invalid_argument("decompose: target not in the kernel");

    Decomposition result;
    if (is_zero(u)) return result;

    Mat kernel = integer_kernel(A);
    assert(!kernel.empty());  // u is a nonzero kernel member

    Bounds bounds;
    bounds.limits.reserve(n);
    for (const Int& x : u) bounds.limits.emplace_back(x);
    HilbertLift lift(kernel, bounds);

    Vec remaining = u;
    std::map<Vec, Int> terms;
    for (;;) {
        // pull out any fully revealed vector below the remaining target
        // and tighten the bounds in place (no restart)
        bool subtracted = true;
        while (subtracted) {
            subtracted = false;
            for (const Elem& h : lift.current()) {
                bool nonneg = true;
                for (const Int& x : h.full)
                    if (x < 0) { nonneg = false; break; }
                if (!nonneg) continue;
                Vec v = lift.to_original(h.full);
                if (is_zero(v) || !leq(v, remaining)) continue;
                do {
                    remaining = sub(remaining, v);
                    terms[v] += 1;
                } while (leq(v, remaining));
                Bounds tight;
                for (const Int& x : remaining) tight.limits.emplace_back(x);
                lift.tighten(tight);
                subtracted = true;
                break;
            }
        }
        if (lift.done()) break;
        lift.step();
    }
    assert(is_zero(remaining));

    for (auto& [v, mult] : terms) result.terms.emplace_back(v, mult);
    return result;
}

DualConeResult dual_cone(const Mat& P) {
    if (P.empty()) throw std::invalid_argument("dual_cone: no generators");
    size_t n = P[0].size();
    for (const Vec& p : P)
        if (is_zero(p)) throw std::invalid_argument("dual_cone: zero generator row");
    if (rational_rank(P) < n)
        throw degeneracy_error(
            "dual_cone: generators do not span; the dual contains a line");

    // work in the column span of P: cone = span(columns) within the
    // nonnegative orthant of u-space
    Mat Q(n, Vec(P.size()));
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t k = 0; k < n; ++k) Q[k][i] = P[i][k];

    std::vector<Vec> rays_u = extreme_rays(Q);
    std::vector<Vec> hilb_u =
        minimal_generators(Q, Bounds::unbounded(P.size()));

    DualConeResult out;
    for (const Vec& u : rays_u)
        out.rays.push_back(primitive_integer(rational_solve(P, u)));
    for (const Vec& u : hilb_u) {
        RatVec x = rational_solve(P, u);
        Vec v(x.size());
        for (size_t k = 0; k < x.size(); ++k) {
            if (x[k].get_den() != 1)
                throw degeneracy_error("dual_cone: non-integral pullback");
            v[k] = x[k].get_num();
        }
        out.hilbert.push_back(std::move(v));
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    std::sort(out.hilbert.begin(), out.hilbert.end(), lex_less);
    return out;
}

std::vector<Vec> hilbert_from_generators(const Mat& P) {
    DualConeResult dual = dual_cone(P);
    if (dual.rays.empty())
        throw degeneracy_error("hilbert_from_generators: dual cone has no rays");
    return dual_cone(dual.rays).hilbert;
}

std::optional<Vec> improve_binary(const Mat& A, const Vec& b, const Vec& c,
                                  const Vec& z0) {
    size_t n = A.empty() ? z0.size() : A[0].size();
    if (z0.size() != n || c.size() != n)
        throw std::invalid_argument("improve_binary: dimension mismatch");
    for (const Int& x : z0)
        if (x != 0 && x != 1)
            throw std::invalid_argument("improve_binary: start point not binary");
    if (mat_apply(A, z0) != b)
        throw std::invalid_argument("improve_binary: start point infeasible");

    // flip transform: negate columns (and costs) where z0 is 1
    Mat flipped = A;
    Vec cost = c;
    for (size_t k = 0; k < n; ++k) {
        if (z0[k] != 1) continue;
        for (Vec& row : flipped) row[k] = -row[k];
        cost[k] = -cost[k];
    }

    Mat kernel = integer_kernel(flipped);
    if (kernel.empty()) return std::nullopt;
    Bounds ones;
    ones.limits.assign(n, Int(1));
    std::vector<Vec> basis = minimal_generators(kernel, ones);

    for (const Vec& v : basis) {  // already ascending lexicographic
        Int value = 0;
        for (size_t k = 0; k < n; ++k) value += cost[k] * v[k];
        if (value < 0) {
            Vec z(n);
            for (size_t k = 0; k < n; ++k)
                z[k] = z0[k] == 1 ? Int(1) - v[k] : v[k];
            return z;
        }
    }
    return std::nullopt;
}

Mat magic_system(size_t n, bool diagonals) {
    if (n < 1) throw std::invalid_argument("magic_system: side length must be positive");
    size_t vars = n * n;
    auto line = [&](auto&& cells) {
        Vec v(vars, 0);
        for (auto [r, c] : cells) v[r * n + c] = 1;
        return v;
    };

    std::vector<std::pair<size_t, size_t>> cells;
    auto row_line = [&](size_t r) {
        cells.clear();
        for (size_t c = 0; c < n; ++c) cells.emplace_back(r, c);
        return line(cells);
    };
    auto col_line = [&](size_t c) {
        cells.clear();
        for (size_t r = 0; r < n; ++r) cells.emplace_back(r, c);
        return line(cells);
    };

    Vec ref = row_line(0);
    Mat A;
    auto push_diff = [&](const Vec& l) {
        Vec d = sub(l, ref);
        if (!is_zero(d)) A.push_back(std::move(d));
    };
    for (size_t r = 1; r < n; ++r) push_diff(row_line(r));
    for (size_t c = 0; c < n; ++c) push_diff(col_line(c));
    if (diagonals) {
        cells.clear();
        for (size_t i = 0; i < n; ++i) cells.emplace_back(i, i);
        push_diff(line(cells));
        cells.clear();
        for (size_t i = 0; i < n; ++i) cells.emplace_back(i, n - 1 - i);
        push_diff(line(cells));
    }
    return A;
}

}  // namespace conelift
