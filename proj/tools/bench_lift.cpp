// Compares the serial and parallel candidate generation paths of the
// graded lift on the magic square systems. Prints wall times and checks
// that both paths yield identical Hilbert bases.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "conelift/apps.hpp"
#include "conelift/hilbert.hpp"

using namespace conelift;

namespace {

double run(const Mat& kernel, const Bounds& bounds, int threads,
           std::vector<Vec>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = minimal_generators(kernel, bounds, Strategy::InputOrder,
                             Engine::Graded, threads);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 4;
    if (threads < 2) threads = 2;

    struct Case {
        size_t n;
        Int box;
    };
    const Case cases[] = {{3, Int(10)}, {4, Int(3)}, {4, Int(4)}};

    std::cout << "case                 serial[s]  threads=" << threads
              << "[s]  speedup  size\n";
    for (const Case& c : cases) {
        Mat A = magic_system(c.n);
        Mat kernel = integer_kernel(A);
        Bounds bounds;
        bounds.limits.assign(c.n * c.n, c.box);

        std::vector<Vec> serial, parallel;
        double ts = run(kernel, bounds, 1, serial);
        double tp = run(kernel, bounds, threads, parallel);
        if (serial != parallel) {
            std::cerr << "MISMATCH between serial and parallel results\n";
            return 1;
        }
        std::printf("magic %zux%zu box %-6s  %9.3f  %12.3f  %7.2f  %4zu\n",
                    c.n, c.n, c.box.get_str().c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, serial.size());
    }
    return 0;
}
