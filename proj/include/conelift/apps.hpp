#pragma once

#include <optional>

#include "conelift/hilbert.hpp"

namespace conelift {

struct Decomposition {
    // (basis vector, positive multiplicity), sorted lexicographically
    std::vector<std::pair<Vec, Int>> terms;

    Vec sum(size_t n) const;
};

struct DualConeResult {
    std::vector<Vec> rays;     // facet normals of the primal cone
    std::vector<Vec> hilbert;  // Hilbert basis of the dual cone
};

// Write u as a nonnegative integer combination of the truncated
// Hilbert basis of ker(A), tightening bounds as full vectors below the
// remaining target are discovered mid-lift.
Decomposition decompose(const Mat& A, const Vec& u);

// Extreme rays and Hilbert basis of {v : p_i . v >= 0 for all rows p_i
// of P}, computed in the column span of P and pulled back through
// Pv = u. Throws degeneracy_error when P lacks full column rank.
DualConeResult dual_cone(const Mat& P);

// Hilbert basis of the cone generated by the rows of P (dual of the
// dual construction).
std::vector<Vec> hilbert_from_generators(const Mat& P);

// One improving step for min { c.z : Az = b, z binary } from a
// feasible z0; nullopt certifies that no improving flip vector exists.
std::optional<Vec> improve_binary(const Mat& A, const Vec& b, const Vec& c,
                                  const Vec& z0);

// Homogeneous equality system whose kernel-orthant lattice points are
// the n x n magic squares (line sums written as differences against
// the first row sum).
Mat magic_system(size_t n, bool diagonals = true);

}  // namespace conelift
