#pragma once

#include <optional>

#include "conelift/core.hpp"

namespace conelift {

// Ray representative: a full lattice vector in working order, kept
// primitive (gcd 1 over all coordinates). Rays are unique up to
// positive scaling, so all arithmetic stays integral.
struct RayElem {
    Vec full;

    const Int& last(size_t stage) const { return full[stage - 1]; }
};

// v divided by the (positive) gcd of its entries; sign preserved
Vec canonicalize_ray(const Vec& v);

// supp(g) within supp(s) over the stage coordinates, with the lift
// coordinate read sign-consistently
bool supp_contained(const RayElem& g, const RayElem& s, size_t stage);

size_t supp_size(const Vec& v, size_t count);

// one lift per element of current, plus the +-pivot pair when j < rank
std::vector<RayElem> build_input_ray(const TriangularBasis& basis,
                                     const std::vector<RayElem>& current,
                                     size_t j);

// integral representative |w'| v + |v'| w of the last-cancelling
// combination; empty unless the lift signs strictly oppose
std::optional<RayElem> s_vector_ray(const RayElem& f, const RayElem& g,
                                    size_t stage);

// support-based reduction; the stage support strictly shrinks each step
RayElem normal_form_ray(RayElem s, const std::vector<RayElem>& G, size_t stage);

// completion with candidates processed by increasing prefix support
std::vector<RayElem> complete_ray(const std::vector<RayElem>& F, size_t stage);

// drop non-support-minimal elements and duplicate directions
std::vector<RayElem> minimize_ray(const std::vector<RayElem>& G, size_t stage);

// extreme rays of span(generators) intersected with the nonnegative
// orthant; primitive vectors in original column order, sorted
std::vector<Vec> extreme_rays(const Mat& generators);

}  // namespace conelift
