// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conelift/apps.hpp"
#include "conelift/hilbert.hpp"
#include "conelift/oracle.hpp"
#include "conelift/ratlin.hpp"
#include "conelift/rays.hpp"

using namespace conelift;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++g_failures;
}

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Mat random_kernel_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        size_t d = 1 + rng() % 3, n = 3 + rng() % 4;
        Mat A(d, Vec(n));
        for (auto& row : A)
            for (auto& x : row) x = entry(rng);
        Mat K = integer_kernel(A);
        if (!K.empty()) return K;
    }
}

// Stop-rule audit shared by the Hilbert criteria: after the rule fires
// at level k*, every opposite-sign pair sum at levels k*+1..2k* that
// fits the (uniform) bounds must be sign-divided by an accepted
// element.
struct StopRuleAudit {
    long checked = 0;
    long violations = 0;
    Int uniform_bound;

    StepCallback callback() {
        return [this](const GradedStep& step) { audit(step); };
    }

    void audit(const GradedStep& step) {
        std::vector<Elem> acc = step.flatten();
        const Int lo = step.stop_level + 1;
        const Int hi = step.stop_level * 2;
        for (size_t a = 0; a < acc.size(); ++a) {
            for (size_t b = a; b < acc.size(); ++b) {
                const Elem& f = acc[a];
                const Elem& g = acc[b];
                if (sgn(f.last(step.stage)) * sgn(g.last(step.stage)) >= 0)
                    continue;
                Int level = f.level + g.level;
                if (level < lo || level > hi) continue;
                Vec s = add(f.full, g.full);
                bool in_bounds = true;
                for (size_t i = 0; i < step.stage - 1 && in_bounds; ++i)
                    if (s[i] > uniform_bound) in_bounds = false;
                if (!in_bounds) continue;
                ++checked;
                bool divided = false;
                for (const Elem& h : acc)
                    if (sign_divides(h.full, s, step.stage)) {
                        divided = true;
                        break;
                    }
                if (!divided) ++violations;
            }
        }
    }
};

std::set<Vec> as_set(const std::vector<Vec>& v) {
    return std::set<Vec>(v.begin(), v.end());
}

void criterion_hilbert_oracle_and_engines() {
    std::mt19937 rng(20260823);
    StopRuleAudit audit;
    audit.uniform_bound = 8;
    bool oracle_ok = true, engine_ok = true;
    std::string detail;
    for (int it = 0; it < 100; ++it) {
        Mat K = random_kernel_instance(rng);
        size_t n = K[0].size();
        Bounds b;
        b.limits.assign(n, Int(8));
        std::vector<Vec> graded =
            minimal_generators(K, b, Strategy::InputOrder, Engine::Graded, 1,
                               audit.callback());
        std::vector<Vec> brute = brute_hilbert(K, 8);
        if (graded != brute && oracle_ok) {
            oracle_ok = false;
            detail = "mismatch at instance " + std::to_string(it);
        }
        std::vector<Vec> completion = minimal_generators(
            K, b, Strategy::InputOrder, Engine::Completion);
        if (completion != graded) engine_ok = false;
    }
    report("hilbert oracle equivalence (100 instances, bound 8)", oracle_ok,
           detail);
    report("engine cross-check (completion vs graded, 100 instances)",
           engine_ok);
    report("stop-rule soundness (pair sums above the fired level)",
           audit.violations == 0 && audit.checked > 0,
           std::to_string(audit.checked) + " candidates checked, " +
               std::to_string(audit.violations) + " violations");
}

void criterion_rays_oracle() {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> entry(-3, 3);
    bool ok = true;
    std::string detail;
    for (int it = 0; it < 100; ++it) {
        size_t s = 1 + rng() % 3, n = 3 + rng() % 6;
        Mat G(s, Vec(n));
        for (auto& row : G)
            for (auto& x : row) x = entry(rng);
        if (extreme_rays(G) != brute_rays(G)) {
            ok = false;
            detail = "mismatch at instance " + std::to_string(it);
            break;
        }
    }
    report("rays oracle equivalence (100 instances, n <= 8)", ok, detail);
}

void criterion_dual_cone() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-2, 2);
    bool ok = true;
    std::string detail;
    int done = 0;
    while (done < 50 && ok) {
        size_t n = 2 + rng() % 4, s = n + rng() % (7 - n);
        Mat P(s, Vec(n));
        for (auto& row : P)
            for (auto& x : row) x = entry(rng);
        bool degenerate = false;
        for (const Vec& p : P)
            if (is_zero(p)) degenerate = true;
        if (degenerate || rational_rank(P) < n) continue;

        // cheap well-posedness screen: facet normals with large entries
        // force Hilbert elements far outside the size-6 oracle box
        {
            Mat Q(n, Vec(P.size()));
            for (size_t i = 0; i < P.size(); ++i)
                for (size_t k = 0; k < n; ++k) Q[k][i] = P[i][k];
            bool tame = true;
            for (const Vec& u : extreme_rays(Q)) {
                Vec v = primitive_integer(rational_solve(P, u));
                for (const Int& x : v)
                    if (abs(x) > 8) tame = false;
            }
            if (!tame) continue;
        }

        DualConeResult res;
        try {
            res = dual_cone(P);
        } catch (const degeneracy_error&) {
            continue;  // non-integral pullback: not well-posed
        }
        // each ray lies in the dual cone and is tight on >= n-1
        // independent generators
        for (const Vec& v : res.rays) {
            Mat tight;
            for (const Vec& p : P) {
                Int dot = 0;
                for (size_t i = 0; i < n; ++i) dot += p[i] * v[i];
                if (dot < 0) {
                    ok = false;
                    detail = "ray outside the dual cone";
                }
                if (dot == 0) tight.push_back(p);
            }
            if (tight.empty() || rational_rank(tight) + 1 < n) {
                ok = false;
                detail = "ray not tight on enough generators";
            }
        }
        if (!ok) break;

        // oracle for hilbert_from_generators: brute_hilbert in the
        // column span of the facet-normal matrix, pulled back
        std::vector<Vec> H;
        try {
            H = hilbert_from_generators(P);
        } catch (const degeneracy_error&) {
            continue;
        }
        const Mat& N = res.rays;  // rows of N generate the dual, so
                                  // cone(P rows) = {v : Nv >= 0}
        size_t m = N.size();
        Mat Q(n, Vec(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t k = 0; k < n; ++k) Q[k][i] = N[i][k];
        bool fits = true;
        for (const Vec& v : H) {
            for (size_t i = 0; i < m && fits; ++i) {
                Int dot = 0;
                for (size_t k = 0; k < n; ++k) dot += N[i][k] * v[k];
                if (dot > 6) fits = false;
            }
        }
        if (!fits) continue;  // image leaves the oracle box; resample

        std::vector<Vec> expect;
        bool integral = true;
        for (const Vec& u : brute_hilbert(Q, 6)) {
            RatVec x = rational_solve(N, u);
            Vec v(x.size());
            for (size_t k = 0; k < x.size(); ++k) {
                if (x[k].get_den() != 1) integral = false;
                v[k] = x[k].get_num();
            }
            expect.push_back(std::move(v));
        }
        if (!integral) continue;
        if (as_set(H) != as_set(expect)) {
            ok = false;
            detail = "hilbert_from_generators disagrees with the box oracle";
        }
        ++done;
    }
    report("dual-cone correctness (50 instances)", ok, detail);
}

void criterion_named_instances() {
    bool ok = true;
    std::string detail;

    Mat K1 = integer_kernel({vec({1, 1, -1})});
    if (minimal_generators(K1, Bounds::unbounded(3)) !=
        std::vector<Vec>{vec({0, 1, 1}), vec({1, 0, 1})}) {
        ok = false;
        detail = "ker [1 1 -1]";
    }
    Mat K2 = integer_kernel({vec({1, 2, -3})});
    if (minimal_generators(K2, Bounds::unbounded(3)) !=
        std::vector<Vec>{vec({0, 3, 2}), vec({1, 1, 1}), vec({3, 0, 1})}) {
        ok = false;
        detail = "ker [1 2 -3]";
    }
    if (hilbert_from_generators({vec({0, 1}), vec({2, 1})}) !=
        std::vector<Vec>{vec({0, 1}), vec({1, 1}), vec({2, 1})}) {
        ok = false;
        detail = "cone((0,1),(2,1))";
    }
    Mat K3 = integer_kernel(magic_system(3));
    Bounds b6;
    b6.limits.assign(9, Int(6));
    if (minimal_generators(K3, b6) != brute_hilbert(K3, 6)) {
        ok = false;
        detail = "3x3 magic system";
    }
    report("named instances", ok, detail);
}

void criterion_strategy_invariance() {
    std::mt19937 rng(99);
    bool ok = true;
    std::string detail;
    for (int it = 0; it < 25; ++it) {
        Mat K = random_kernel_instance(rng);
        Bounds b;
        b.limits.assign(K[0].size(), Int(8));
        std::vector<Vec> a = minimal_generators(K, b, Strategy::InputOrder);
        std::vector<Vec> m = minimal_generators(K, b, Strategy::MinPairs);
        std::vector<Vec> z = minimal_generators(K, b, Strategy::MaxZeros);
        if (a != m || a != z) {
            ok = false;
            detail = "mismatch at instance " + std::to_string(it);
            break;
        }
    }
    report("strategy invariance (25 instances x 3 strategies)", ok, detail);
}

std::string run_cli(const std::string& args, const fs::path& dir, int& code) {
    fs::path out = dir / "out.txt";
    std::string cmd = std::string(CONELIFT_BIN) + " " + args + " > " +
                      out.string() + " 2> " + (dir / "err.txt").string();
    code = WEXITSTATUS(std::system(cmd.c_str()));
    std::ifstream in(out);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_cli_determinism() {
    fs::path dir = fs::temp_directory_path() / "conelift_acceptance";
    fs::create_directories(dir);
    auto fixture = [&](const char* name, const char* content) {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    };
    std::string a = fixture("a.mat", "2 5\n1 1 -1 0 2\n0 1 1 -2 1\n");
    std::string gens = fixture("p.mat", "2 2\n0 1\n2 1\n");
    std::string ker = fixture("k.mat", "1 3\n1 1 -1\n");
    std::string target = fixture("u.mat", "1 3\n2 1 3\n");
    std::string im_a = fixture("im_a.mat", "1 2\n1 -1\n");
    std::string im_b = fixture("im_b.mat", "1 1\n0\n");
    std::string im_c = fixture("im_c.mat", "1 2\n-1 -1\n");
    std::string im_z = fixture("im_z.mat", "1 2\n0 0\n");

    std::vector<std::string> cmds = {
        "hilbert --kernel " + a,
        "hilbert --kernel " + a + " --threads 4",
        "hilbert --kernel " + a + " --engine completion",
        "rays --kernel " + a,
        "dual " + gens,
        "hilbert-from-gens " + gens,
        "decompose --kernel " + ker + " --target " + target,
        "improve --matrix " + im_a + " --rhs " + im_b + " --cost " + im_c +
            " --start " + im_z,
        "magic-system 4",
    };
    bool ok = true;
    std::string detail;
    for (const std::string& cmd : cmds) {
        int c1 = 0, c2 = 0;
        std::string o1 = run_cli(cmd, dir, c1);
        std::string o2 = run_cli(cmd, dir, c2);
        if (c1 != 0 || c2 != 0 || o1 != o2 || o1.empty()) {
            ok = false;
            detail = cmd;
            break;
        }
    }
    report("CLI determinism (all subcommands, including --threads 4)", ok,
           detail);
}

void criterion_magic4() {
    Mat K = integer_kernel(magic_system(4));
    Bounds b;
    b.limits.assign(16, Int(3));
    std::vector<Vec> H = minimal_generators(K, b);
    std::vector<Vec> brute = brute_hilbert(K, 3);
    report("4x4 magic system, bound 3, oracle equivalence", H == brute,
           std::to_string(H.size()) + " elements");
    // The published 6x6 figure (522,347 basis elements, multi-day run)
    // is documented in the README as an expectation, not re-run here.
}

}  // namespace

int main() {
    criterion_hilbert_oracle_and_engines();
    criterion_rays_oracle();
    criterion_dual_cone();
    criterion_named_instances();
    criterion_strategy_invariance();
    criterion_cli_determinism();
    criterion_magic4();
    return g_failures == 0 ? 0 : 1;
}
