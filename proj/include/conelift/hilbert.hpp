#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "conelift/core.hpp"

namespace conelift {

// column selection for the lift order once past the pivot columns
enum class Strategy { InputOrder, MinPairs, MaxZeros };
// graded = reduction-free level-by-level engine; completion = generic
// critical-pair loop kept as a cross-check
enum class Engine { Graded, Completion };

Strategy strategy_from_name(const std::string& name);
Engine engine_from_name(const std::string& name);

// A lift-stage element. `full` is an entire lattice vector in working
// column order; at stage st its first st-1 coords are the nonnegative
// prefix and coord st-1 is the signed lift coordinate. Carrying the
// whole vector means later coordinates are read off, never re-solved.
struct Elem {
    Vec full;
    Int level;  // 1-norm of the prefix

    const Int& last(size_t stage) const { return full[stage - 1]; }
};

// One graded lift step: accepted minimal elements bucketed by prefix
// norm, plus what the stopping rule saw (kept for auditing).
struct GradedStep {
    size_t stage = 0;                         // j+1
    std::map<Int, std::vector<Elem>> buckets; // level -> accepted
    Int stop_level = 0;                       // k* where the rule fired
    bool has_pivot = false;                   // j < s
    Int pivot = 0;
    Vec pivot_row;

    std::vector<Elem> flatten() const;
};

using StepCallback = std::function<void(const GradedStep&)>;

// S-vector: sum of two elements with strictly opposite lift signs,
// subject to the truncation bounds.
std::optional<Elem> s_vector_hb(const Elem& f, const Elem& g,
                                const Bounds& bounds, size_t stage);

// Reduce s modulo G under sign-compatible divisibility; first divisor
// in insertion order wins. The stage 1-norm strictly decreases each
// iteration.
Elem normal_form_hb(Elem s, const std::vector<Elem>& G, size_t stage);

// Generic completion loop (FIFO queue of S-vectors); returns a
// superset of H+ u H- at this stage.
std::vector<Elem> complete_hb(const std::vector<Elem>& F, const Bounds& bounds,
                              size_t stage);

// Drop elements sign-divided by another (distinct projection) element.
std::vector<Elem> minimize_hb(const std::vector<Elem>& G, size_t stage);

// Reduction-free graded step; returns exactly H+ u H- at this stage.
// pivot is null when j >= s. threads > 1 parallelizes candidate
// generation; results are identical to the serial run.
GradedStep graded_step_hb(const std::vector<Elem>& F, size_t stage,
                          const Int* pivot, const Vec& pivot_row,
                          const Bounds& bounds, int threads);

// Strategy choice among working columns j..n-1; elements expose their
// prospective lift coordinates through full[c].
size_t choose_next_column(const std::vector<Elem>& current, size_t j, size_t n,
                          Strategy strategy);

// The project-and-lift pipeline, one stage at a time. Used directly by
// the decomposition application, which tightens bounds mid-run.
class HilbertLift {
public:
    HilbertLift(const Mat& generators, Bounds bounds,
                Strategy strategy = Strategy::InputOrder,
                Engine engine = Engine::Graded, int threads = 1);

    bool done() const;
    void step();
    std::vector<Vec> finish();  // run to stage n; un-permuted, sorted

    size_t stage() const { return stage_; }
    const TriangularBasis& basis() const { return basis_; }
    const std::vector<Elem>& current() const { return current_; }

    Vec to_original(const Vec& w) const { return basis_.to_original(w); }
    // replace the bounds (original order) and prune current elements
    void tighten(const Bounds& bounds_original);

    StepCallback on_step;  // invoked after every graded step

private:
    TriangularBasis basis_;
    Bounds wbounds_;  // working order
    Strategy strategy_;
    Engine engine_;
    int threads_;
    size_t stage_ = 1;
    std::vector<Elem> current_;  // H_j^+ carriers

    void swap_columns(size_t a, size_t b);
    std::vector<Elem> build_input(bool& has_pivot);
};

// Input set F of Lemma-2.2 shape for the next stage, exposed for tests.
std::vector<Elem> build_input_hb(const TriangularBasis& basis,
                                 const std::vector<Elem>& current, size_t j,
                                 const Bounds& wbounds);

// Top-level: minimal generating set of the monoid, intersected with
// {z <= bounds}. Rows in original column order, sorted.
std::vector<Vec> minimal_generators(const Mat& generators, const Bounds& bounds,
                                    Strategy strategy = Strategy::InputOrder,
                                    Engine engine = Engine::Graded,
                                    int threads = 1,
                                    StepCallback on_step = nullptr);

}  // namespace conelift
