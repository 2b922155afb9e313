// Timing comparison of the OpenMP kernels against their serial references:
// graph refinement and the dimension-formula sweep. Output agreement is
// asserted before timings are reported.

#include "okamoto/dimension.hpp"
#include "okamoto/function.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace okamoto;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_graph(int depth) {
    Param p{Rat(11, 20)};
    auto t0 = std::chrono::steady_clock::now();
    GraphSample serial = sample_graph_serial(p, depth);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    GraphSample parallel = sample_graph(p, depth);
    double tp = seconds(t0);
    for (std::size_t i = 0; i < serial.points.size(); ++i) {
        if (serial.points[i] != parallel.points[i]) {
            std::fprintf(stderr, "graph kernel mismatch at index %zu\n", i);
            std::exit(1);
        }
    }
    std::printf("graph depth=%2d points=%8zu   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                depth, serial.points.size(), ts * 1e3, tp * 1e3, ts / tp);
}

void bench_sweep(int grid) {
    std::vector<Rat> as;
    for (int i = 1; i < grid; ++i) as.emplace_back(i, grid);
    std::vector<double> serial(as.size()), parallel(as.size());
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < as.size(); ++i)
        serial[i] = box_dimension_graph(to_double(as[i])) + dim_frequency_set(
                        to_double(as[i]), FreqFamily::Intersection);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < as.size(); ++i)
        parallel[i] = box_dimension_graph(to_double(as[i])) + dim_frequency_set(
                          to_double(as[i]), FreqFamily::Intersection);
    double tp = seconds(t0);
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (serial[i] != parallel[i]) {
            std::fprintf(stderr, "sweep kernel mismatch at index %zu\n", i);
            std::exit(1);
        }
    }
    std::printf("sweep grid=%7d                serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                grid, ts * 1e3, tp * 1e3, ts / tp);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available: parallel paths run serially\n");
#endif
    for (int depth = 8; depth <= 11; ++depth) bench_graph(depth);
    bench_sweep(200000);
    return 0;
}
