#include "conelift/rays.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include <iostream>

#include "conelift/log.hpp"

namespace conelift {

Vec canonicalize_ray(const Vec& v) {
    Int g = vec_gcd(v);
    if (g == 0) throw std::invalid_argument("canonicalize_ray: zero vector");
    if (g == 1) return v;
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

size_t supp_size(const Vec& v, size_t count) {
    size_t s = 0;
    for (size_t i = 0; i < count; ++i)
        if (v[i] != 0) ++s;
    return s;
}

bool supp_contained(const RayElem& g, const RayElem& s, size_t stage) {
    for (size_t i = 0; i + 1 < stage; ++i)
        if (g.full[i] != 0 && s.full[i] == 0) return false;
    const Int& gl = g.last(stage);
    if (gl == 0) return true;
    const Int& sl = s.last(stage);
    return sl != 0 && sgn(gl) == sgn(sl);
}

std::vector<RayElem> build_input_ray(const TriangularBasis& basis,
                                     const std::vector<RayElem>& current,
                                     size_t j) {
    std::vector<RayElem> F;
    for (const RayElem& h : current)
        F.push_back({canonicalize_ray(h.full)});
    if (j < basis.rank()) {
        F.push_back({canonicalize_ray(basis.rows[j])});
        F.push_back({canonicalize_ray(negated(basis.rows[j]))});
    }
    return F;
}

std::optional<RayElem> s_vector_ray(const RayElem& f, const RayElem& g,
                                    size_t stage) {
    const Int& fl = f.last(stage);
    const Int& gl = g.last(stage);
    if (sgn(fl) * sgn(gl) >= 0) return std::nullopt;
    Vec r = scaled(abs(gl), f.full);
    add_scaled(r, abs(fl), g.full);
    assert(r[stage - 1] == 0);
    if (is_zero(r)) return std::nullopt;
    return RayElem{canonicalize_ray(r)};
}

RayElem normal_form_ray(RayElem s, const std::vector<RayElem>& G, size_t stage) {
    for (;;) {
        if (is_zero(s.full, stage)) break;
        const RayElem* div = nullptr;
        for (const RayElem& g : G) {
            if (supp_contained(g, s, stage)) { div = &g; break; }
        }
        if (!div) break;
        Rat alpha;
        bool first = true;
        for (size_t i = 0; i < stage; ++i) {
            if (div->full[i] == 0) continue;
            Rat q(s.full[i], div->full[i]);
            q.canonicalize();
            if (first || q < alpha) { alpha = q; first = false; }
        }
        assert(!first && alpha > 0);
        Int num = alpha.get_num();
        Int den = alpha.get_den();
#ifndef NDEBUG
        size_t before = supp_size(s.full, stage);
#endif
        for (size_t k = 0; k < s.full.size(); ++k)
            s.full[k] = den * s.full[k] - num * div->full[k];
        assert(supp_size(s.full, stage) < before);
        if (is_zero(s.full)) break;
        s.full = canonicalize_ray(s.full);
    }
    return s;
}

namespace {

Vec stage_key(const RayElem& e, size_t stage) {
    Vec p = project(e.full, stage);
    Int g = vec_gcd(p);
    if (g > 1)
        for (Int& x : p) x /= g;
    return p;
}

}  // namespace

std::vector<RayElem> complete_ray(const std::vector<RayElem>& F, size_t stage) {
    std::vector<RayElem> G;
    std::set<Vec> seen;
    for (const RayElem& f : F) {
        if (is_zero(f.full, stage)) continue;
        if (seen.insert(stage_key(f, stage)).second) G.push_back(f);
    }

    // queue ordered by increasing prefix support, then lexicographic
    auto cmp = [stage](const RayElem& a, const RayElem& b) {
        size_t sa = supp_size(a.full, stage - 1);
        size_t sb = supp_size(b.full, stage - 1);
        if (sa != sb) return sa < sb;
        return std::lexicographical_compare(a.full.begin(), a.full.end(),
                                            b.full.begin(), b.full.end());
    };
    std::multiset<RayElem, decltype(cmp)> C(cmp);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t k = i + 1; k < G.size(); ++k)
            if (auto s = s_vector_ray(G[i], G[k], stage)) C.insert(*s);

    while (!C.empty()) {
        RayElem s = *C.begin();
        C.erase(C.begin());
        RayElem f = normal_form_ray(std::move(s), G, stage);
        if (is_zero(f.full, stage)) continue;
        for (const RayElem& g : G)
            if (auto sv = s_vector_ray(f, g, stage)) C.insert(*sv);
        G.push_back(std::move(f));
    }
    return G;
}

std::vector<RayElem> minimize_ray(const std::vector<RayElem>& G, size_t stage) {
    // dedup equal directions first
    std::map<Vec, RayElem> uniq;
    for (const RayElem& g : G) uniq.emplace(stage_key(g, stage), g);

    std::vector<RayElem> out;
    for (const auto& [kz, z] : uniq) {
        bool dominated = false;
        for (const auto& [kg, g] : uniq) {
            if (kg == kz) continue;
            if (supp_contained(g, z, stage) && !supp_contained(z, g, stage)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(z);
    }
    return out;
}

std::vector<Vec> extreme_rays(const Mat& generators) {
    TriangularBasis basis = triangularize(generators);
    size_t n = basis.dim();
    if (basis.rank() == 0) return {};

    std::vector<RayElem> current{RayElem{canonicalize_ray(basis.rows[0])}};
    for (size_t j = 1; j < n; ++j) {
        std::vector<RayElem> F = build_input_ray(basis, current, j);
        std::vector<RayElem> M = minimize_ray(complete_ray(F, j + 1), j + 1);
        current.clear();
        for (RayElem& e : M)
            if (e.full[j] >= 0) current.push_back(std::move(e));
        if (log_info())
            std::cerr << "conelift: ray stage " << j + 1 << " |R+| = "
                      << current.size() << "\n";
    }

    std::vector<Vec> out;
    std::set<Vec> seen;
    for (const RayElem& e : current) {
        Vec v = canonicalize_ray(basis.to_original(e.full));
        if (seen.insert(v).second) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace conelift
