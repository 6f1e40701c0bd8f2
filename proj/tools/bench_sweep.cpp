// Times the duality pullback sample sweep with the serial reference against the
// OpenMP kernel and verifies the reductions agree bitwise.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "jtlab/pullback.hpp"
#include "jtlab/spectral.hpp"

#ifdef JTLAB_HAS_OPENMP
#include <omp.h>
#endif

using namespace jtlab;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    const int samples = argc > 1 ? std::atoi(argv[1]) : 64;
    const int p = argc > 3 ? std::atoi(argv[2]) : 4;
    const int q = argc > 3 ? std::atoi(argv[3]) : 8;
    if (samples < 1 || p < 1 || q < p) {
        std::fprintf(stderr, "usage: bench_sweep [samples] [p q]\n");
        return 2;
    }

    const Descriptor d = Descriptor::type_i(p, q);
    const auto zs = sample_domain(d, 42, samples);
    auto sweep = [&](bool parallel) {
        return duality_residual(DualityDirection::F0_minus, zs, 1e-5, parallel);
    };

#ifdef JTLAB_HAS_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("family %s, %d samples\n", d.name().c_str(), samples);

    double r_serial = 0.0, r_parallel = 0.0;
    sweep(false); // warm up
    const double t_serial = time_ms([&] { r_serial = sweep(false); });
    const double t_parallel = time_ms([&] { r_parallel = sweep(true); });

    std::printf("serial:   %8.1f ms  max residual %.6e\n", t_serial, r_serial);
    std::printf("parallel: %8.1f ms  max residual %.6e\n", t_parallel, r_parallel);
    std::printf("speedup:  %.2fx\n", t_serial / t_parallel);

    const bool same = std::memcmp(&r_serial, &r_parallel, sizeof(double)) == 0;
    std::printf("bitwise identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
