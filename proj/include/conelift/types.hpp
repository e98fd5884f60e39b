#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conelift {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

// enumeration / dimension guards exceeded
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ill-posed geometry (non-pointed dual, rank-deficient pullback)
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// unknown strategy / engine name
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline bool is_zero(const Vec& v, size_t count) {
    for (size_t i = 0; i < count; ++i)
        if (v[i] != 0) return false;
    return true;
}

inline bool is_zero(const Vec& v) { return is_zero(v, v.size()); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline void add_scaled(Vec& a, const Int& c, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

inline Vec scaled(const Int& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec negated(const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

// componentwise a <= b
inline bool leq(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Int norm1(const Vec& v, size_t count) {
    Int s = 0;
    for (size_t i = 0; i < count; ++i) s += abs(v[i]);
    return s;
}

inline Int norm1(const Vec& v) { return norm1(v, v.size()); }

inline Int vec_gcd(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// per-coordinate upper bounds; nullopt means unbounded
struct Bounds {
    std::vector<std::optional<Int>> limits;

    static Bounds unbounded(size_t n) {
        Bounds b;
        b.limits.assign(n, std::nullopt);
        return b;
    }

    size_t size() const { return limits.size(); }

    bool within(const Int& x, size_t i) const {
        return !limits[i] || x <= *limits[i];
    }

    // v[0..count) componentwise below the bounds
    bool within_prefix(const Vec& v, size_t count) const {
        for (size_t i = 0; i < count; ++i)
            if (limits[i] && v[i] > *limits[i]) return false;
        return true;
    }
};

}  // namespace conelift
