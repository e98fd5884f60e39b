#pragma once

#include "conelift/core.hpp"

namespace conelift {

// Exhaustive reference: minimal generators among all lattice points in
// [0, box]^n, by coefficient enumeration over the triangular basis.
// Throws resource_error past ~1e7 enumerated points.
std::vector<Vec> brute_hilbert(const Mat& generators, const Int& box);

// Exhaustive reference for extreme rays: support scan with a rank test
// per candidate support. Guarded to ambient dimension <= 12.
std::vector<Vec> brute_rays(const Mat& generators);

// z reachable as a nonnegative integer combination of H, decided by
// greedy subtraction with backtracking.
bool check_decomposition(const std::vector<Vec>& H, const Vec& z);

}  // namespace conelift
