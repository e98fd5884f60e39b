#include "conelift/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <iostream>
#include <set>

#include "conelift/log.hpp"

namespace conelift {

Strategy strategy_from_name(const std::string& name) {
    if (name == "input-order") return Strategy::InputOrder;
    if (name == "min-pairs") return Strategy::MinPairs;
    if (name == "max-zeros") return Strategy::MaxZeros;
    throw config_error("unknown strategy: " + name);
}

Engine engine_from_name(const std::string& name) {
    if (name == "graded") return Engine::Graded;
    if (name == "completion") return Engine::Completion;
    throw config_error("unknown engine: " + name);
}

std::vector<Elem> GradedStep::flatten() const {
    std::vector<Elem> out;
    for (const auto& [level, bucket] : buckets)
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

std::optional<Elem> s_vector_hb(const Elem& f, const Elem& g,
                                const Bounds& bounds, size_t stage) {
    if (sgn(f.last(stage)) * sgn(g.last(stage)) >= 0) return std::nullopt;
    Elem r;
    r.full = add(f.full, g.full);
    // truncation restricts the prefix only; the lift coordinate becomes
    // a bounded prefix coordinate at the next stage
    if (!bounds.within_prefix(r.full, stage - 1)) return std::nullopt;
    r.level = f.level + g.level;
    return r;
}

Elem normal_form_hb(Elem s, const std::vector<Elem>& G, size_t stage) {
    for (;;) {
        const Elem* div = nullptr;
        for (const Elem& g : G) {
            if (sign_divides(g.full, s.full, stage)) { div = &g; break; }
        }
        if (!div) break;
        Int alpha = -1;
        for (size_t i = 0; i < stage; ++i) {
            if (div->full[i] == 0) continue;
            Int q = abs(s.full[i]) / abs(div->full[i]);
            if (alpha < 0 || q < alpha) alpha = q;
        }
        assert(alpha >= 1);
#ifndef NDEBUG
        Int before = norm1(s.full, stage);
#endif
        add_scaled(s.full, -alpha, div->full);
        assert(norm1(s.full, stage) < before);
        if (is_zero(s.full, stage)) break;
    }
    s.level = is_zero(s.full, stage) ? Int(0) : norm1(s.full, stage - 1);
    return s;
}

std::vector<Elem> complete_hb(const std::vector<Elem>& F, const Bounds& bounds,
                              size_t stage) {
    std::vector<Elem> G;
    std::set<Vec> seen;
    for (const Elem& f : F) {
        if (is_zero(f.full, stage)) continue;
        if (seen.insert(project(f.full, stage)).second) G.push_back(f);
    }
    std::deque<Elem> C;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t k = i + 1; k < G.size(); ++k)
            if (auto s = s_vector_hb(G[i], G[k], bounds, stage)) C.push_back(*s);

    while (!C.empty()) {
        Elem s = std::move(C.front());
        C.pop_front();
        Elem f = normal_form_hb(std::move(s), G, stage);
        if (is_zero(f.full, stage)) continue;
        for (const Elem& g : G)
            if (auto sv = s_vector_hb(f, g, bounds, stage)) C.push_back(*sv);
        G.push_back(std::move(f));
    }
    return G;
}

std::vector<Elem> minimize_hb(const std::vector<Elem>& G, size_t stage) {
    std::vector<Elem> out;
    for (size_t i = 0; i < G.size(); ++i) {
        bool divided = false;
        for (size_t k = 0; k < G.size() && !divided; ++k) {
            if (k == i) continue;
            if (sign_divides(G[k].full, G[i].full, stage) &&
                !std::equal(G[k].full.begin(), G[k].full.begin() + stage,
                            G[i].full.begin()))
                divided = true;
        }
        if (!divided) out.push_back(G[i]);
    }
    return out;
}

namespace {

// candidate sums for one level, shared by the serial and OpenMP paths
struct PairRef {
    const Elem* x;
    const Elem* y;
};

std::optional<Elem> pair_sum(const PairRef& pr, const Bounds& bounds,
                             size_t stage, const Int* pivot) {
    Elem r;
    r.full = add(pr.x->full, pr.y->full);
    const Int& last = r.full[stage - 1];
    if (pivot && abs(last) >= *pivot) return std::nullopt;
    if (!bounds.within_prefix(r.full, stage - 1)) return std::nullopt;
    r.level = pr.x->level + pr.y->level;
    return r;
}

}  // namespace

GradedStep graded_step_hb(const std::vector<Elem>& F, size_t stage,
                          const Int* pivot, const Vec& pivot_row,
                          const Bounds& bounds, int threads) {
    GradedStep gs;
    gs.stage = stage;
    gs.has_pivot = pivot != nullptr;
    if (pivot) {
        gs.pivot = *pivot;
        gs.pivot_row = pivot_row;
    }

    std::map<Int, std::vector<Elem>> f_by_level;
    Int max_f_level = 0;
    {
        std::set<Vec> seen0;
        for (const Elem& f : F) {
            if (is_zero(f.full, stage)) continue;
            if (f.level == 0) {
                if (seen0.insert(project(f.full, stage)).second)
                    gs.buckets[0].push_back(f);
            } else {
                f_by_level[f.level].push_back(f);
                if (f.level > max_f_level) max_f_level = f.level;
            }
        }
    }

    std::vector<Elem> accepted;  // all buckets, in processing order
    if (auto it = gs.buckets.find(0); it != gs.buckets.end())
        accepted.insert(accepted.end(), it->second.begin(), it->second.end());

    Int last_nonempty = 0;
    for (Int L = 1;; ++L) {
        std::vector<Elem> raw;

        if (auto it = f_by_level.find(L); it != f_by_level.end())
            raw.insert(raw.end(), it->second.begin(), it->second.end());

        // bucket pairs with levels summing to L, opposite lift signs
        std::vector<PairRef> pairs;
        for (Int a = 1; 2 * a <= L; ++a) {
            Int b = L - a;
            auto ia = gs.buckets.find(a);
            auto ib = gs.buckets.find(b);
            if (ia == gs.buckets.end() || ib == gs.buckets.end()) continue;
            const auto& A = ia->second;
            const auto& B = ib->second;
            if (a == b) {
                for (size_t i = 0; i < A.size(); ++i)
                    for (size_t k = i + 1; k < A.size(); ++k)
                        if (sgn(A[i].last(stage)) * sgn(A[k].last(stage)) < 0)
                            pairs.push_back({&A[i], &A[k]});
            } else {
                for (const Elem& x : A)
                    for (const Elem& y : B)
                        if (sgn(x.last(stage)) * sgn(y.last(stage)) < 0)
                            pairs.push_back({&x, &y});
            }
        }

        std::vector<std::optional<Elem>> sums(pairs.size());
        if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
            for (long i = 0; i < (long)pairs.size(); ++i)
                sums[i] = pair_sum(pairs[i], bounds, stage, pivot);
        } else {
            for (size_t i = 0; i < pairs.size(); ++i)
                sums[i] = pair_sum(pairs[i], bounds, stage, pivot);
        }
        for (auto& s : sums)
            if (s) raw.push_back(std::move(*s));

        // closure under the level-0 pair: the partner representative
        // with the lift coordinate shifted by -sign * pivot
        if (pivot) {
            size_t base = raw.size();
            for (size_t i = 0; i < base; ++i) {
                const Int& last = raw[i].full[stage - 1];
                if (last == 0) continue;
                Elem p;
                p.full = last > 0 ? sub(raw[i].full, pivot_row)
                                  : add(raw[i].full, pivot_row);
                p.level = raw[i].level;
                raw.push_back(std::move(p));
            }
        }

        // dedup by stage projection (lifts of equal projections agree
        // after later residue normalization)
        std::map<Vec, Elem> dedup;
        for (Elem& c : raw) {
            if (is_zero(c.full, stage)) continue;
            dedup.emplace(project(c.full, stage), std::move(c));
        }
        std::vector<Elem> cands;
        cands.reserve(dedup.size());
        for (auto& [proj, e] : dedup) cands.push_back(std::move(e));
        std::sort(cands.begin(), cands.end(), [&](const Elem& a, const Elem& b) {
            Int aa = abs(a.last(stage)), ab = abs(b.last(stage));
            if (aa != ab) return aa < ab;
            return std::lexicographical_compare(a.full.begin(),
                                                a.full.begin() + stage,
                                                b.full.begin(),
                                                b.full.begin() + stage);
        });

        // sequential reducibility filter (Corollary-3.2 style: keep iff
        // no accepted element sign-divides the candidate)
        std::vector<Elem> level_acc;
        for (Elem& c : cands) {
            bool divided = false;
            for (const Elem& g : accepted)
                if (sign_divides(g.full, c.full, stage)) { divided = true; break; }
            if (!divided)
                for (const Elem& g : level_acc)
                    if (sign_divides(g.full, c.full, stage)) { divided = true; break; }
            if (!divided) level_acc.push_back(std::move(c));
        }
        if (log_debug())
            std::cerr << "conelift: stage " << stage << " level " << L
                      << ": candidates " << cands.size() << " accepted "
                      << level_acc.size() << "\n";
        if (!level_acc.empty()) {
            accepted.insert(accepted.end(), level_acc.begin(), level_acc.end());
            gs.buckets[L] = std::move(level_acc);
            last_nonempty = L;
        }

        Int k = std::max(std::max(last_nonempty, max_f_level), Int(1));
        if (L >= 2 * k) {
            gs.stop_level = k;
            break;
        }
    }
    return gs;
}

size_t choose_next_column(const std::vector<Elem>& current, size_t j, size_t n,
                          Strategy strategy) {
    if (j >= n) throw std::invalid_argument("choose_next_column: no columns left");
    if (strategy == Strategy::InputOrder || n - j == 1) return j;

    size_t best = j;
    unsigned long long best_score = 0;
    bool first = true;
    for (size_t c = j; c < n; ++c) {
        unsigned long long pos = 0, neg = 0, zeros = 0;
        for (const Elem& h : current) {
            int s = sgn(h.full[c]);
            if (s > 0) ++pos;
            else if (s < 0) ++neg;
            else ++zeros;
        }
        unsigned long long score =
            strategy == Strategy::MinPairs ? pos * neg : zeros;
        bool better = strategy == Strategy::MinPairs ? score < best_score
                                                     : score > best_score;
        if (first || better) {
            best = c;
            best_score = score;
            first = false;
        }
    }
    return best;
}

std::vector<Elem> build_input_hb(const TriangularBasis& basis,
                                 const std::vector<Elem>& current, size_t j,
                                 const Bounds& wbounds) {
    std::vector<Elem> F;
    bool has_pivot = j < basis.rank();
    for (const Elem& h : current) {
        // the freshly lifted coordinate was unbounded at the previous
        // stage; it joins the truncated prefix here
        if (!wbounds.within_prefix(h.full, j)) continue;
        Elem f = h;
        if (has_pivot) {
            const Int& p = basis.pivot(j);
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), f.full[j].get_mpz_t(), p.get_mpz_t());
            if (q != 0) add_scaled(f.full, -q, basis.rows[j]);
        }
        f.level = norm1(f.full, j);
        F.push_back(std::move(f));
    }
    if (has_pivot) {
        F.push_back({basis.rows[j], 0});
        F.push_back({negated(basis.rows[j]), 0});
    }
    return F;
}

HilbertLift::HilbertLift(const Mat& generators, Bounds bounds,
                         Strategy strategy, Engine engine, int threads)
    : basis_(triangularize(generators)),
      strategy_(strategy),
      engine_(engine),
      threads_(threads) {
    size_t n = basis_.dim();
    if (bounds.size() == 0) {
        wbounds_ = Bounds::unbounded(n);
    } else {
        if (bounds.size() != n)
            throw std::invalid_argument("bounds dimension mismatch");
        wbounds_.limits.resize(n);
        for (size_t w = 0; w < n; ++w)
            wbounds_.limits[w] = bounds.limits[basis_.col_perm[w]];
    }
    if (basis_.rank() > 0) current_.push_back(Elem{basis_.rows[0], 0});
}

bool HilbertLift::done() const {
    return basis_.rank() == 0 || stage_ == basis_.dim();
}

void HilbertLift::swap_columns(size_t a, size_t b) {
    for (Vec& row : basis_.rows) std::swap(row[a], row[b]);
    for (Elem& h : current_) std::swap(h.full[a], h.full[b]);
    std::swap(wbounds_.limits[a], wbounds_.limits[b]);
    std::swap(basis_.col_perm[a], basis_.col_perm[b]);
}

std::vector<Elem> HilbertLift::build_input(bool& has_pivot) {
    has_pivot = stage_ < basis_.rank();
    return build_input_hb(basis_, current_, stage_, wbounds_);
}

void HilbertLift::step() {
    assert(!done());
    size_t j = stage_;
    size_t n = basis_.dim();
    if (j >= basis_.rank() && n - j > 1) {
        size_t c = choose_next_column(current_, j, n, strategy_);
        if (c != j) swap_columns(j, c);
    }
    bool has_pivot;
    std::vector<Elem> F = build_input(has_pivot);

    std::vector<Elem> result;
    if (engine_ == Engine::Graded) {
        const Int* pv = has_pivot ? &basis_.pivot(j) : nullptr;
        GradedStep gs = graded_step_hb(F, j + 1, pv,
                                       has_pivot ? basis_.rows[j] : Vec{},
                                       wbounds_, threads_);
        result = gs.flatten();
        if (on_step) on_step(gs);
    } else {
        result = minimize_hb(complete_hb(F, wbounds_, j + 1), j + 1);
    }

    current_.clear();
    for (Elem& e : result)
        if (e.full[j] >= 0) current_.push_back(std::move(e));
    ++stage_;
    if (log_info())
        std::cerr << "conelift: stage " << stage_ << " |H+| = "
                  << current_.size() << "\n";
}

void HilbertLift::tighten(const Bounds& bounds_original) {
    size_t n = basis_.dim();
    if (bounds_original.size() != n)
        throw std::invalid_argument("tighten: bounds dimension mismatch");
    for (size_t w = 0; w < n; ++w)
        wbounds_.limits[w] = bounds_original.limits[basis_.col_perm[w]];
    std::vector<Elem> kept;
    for (Elem& h : current_)
        if (wbounds_.within_prefix(h.full, stage_)) kept.push_back(std::move(h));
    current_ = std::move(kept);
}

std::vector<Vec> HilbertLift::finish() {
    while (!done()) step();
    std::vector<Vec> out;
    out.reserve(current_.size());
    size_t n = basis_.dim();
    for (const Elem& h : current_) {
        // the final coordinate never passed through a prefix check
        if (n > 0 && !wbounds_.within(h.full[n - 1], n - 1)) continue;
        out.push_back(basis_.to_original(h.full));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Vec> minimal_generators(const Mat& generators, const Bounds& bounds,
                                    Strategy strategy, Engine engine,
                                    int threads, StepCallback on_step) {
    HilbertLift lift(generators, bounds, strategy, engine, threads);
    lift.on_step = std::move(on_step);
    return lift.finish();
}

}  // namespace conelift
