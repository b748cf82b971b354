// Benchmark of the enumeration kernels: brute-force reference vs the
// production scan, single-threaded and with the full OpenMP thread pool.
// All routes must agree before a row is printed.

#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

#include "singer/generator.hpp"
#include "singer/reference.hpp"

namespace {

singer::LabeledTriangulation make_input(int vertices) {
    singer::GeneratorConfig config;
    config.seed = 20250810;
    config.target_vertices = vertices;
    config.palette = {2};  // labels are irrelevant for the topology kernels
    return singer::generate(config);
}

using Quad = std::array<int, 4>;

std::vector<Quad> production_circuits(const singer::LabeledTriangulation& L) {
    std::vector<Quad> out;
    for (const auto& c : singer::enumerate_chordless_4_circuits(L))
        out.push_back({c.vertices[0], c.vertices[1], c.vertices[2], c.vertices[3]});
    return out;
}

template <typename F>
double time_of(F&& f, int repeats) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        double t0 = omp_get_wtime();
        f();
        double t1 = omp_get_wtime();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{500, 2000, 8000};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::stoi(argv[i]));
    }
    const int max_threads = omp_get_max_threads();

    std::printf("chordless 4-circuit + 3-clique enumeration, best of 3 runs\n");
    std::printf("%8s %10s %12s %12s %12s %9s\n", "V", "circuits", "reference", "serial", "parallel",
                "speedup");

    for (int n : sizes) {
        singer::LabeledTriangulation L = make_input(n);

        omp_set_num_threads(1);
        std::vector<Quad> serial_result = production_circuits(L);
        auto serial_cliques = singer::enumerate_cliques3(L);
        double t_serial = time_of([&] { production_circuits(L); }, 3) +
                          time_of([&] { singer::enumerate_cliques3(L); }, 3);

        omp_set_num_threads(max_threads);
        std::vector<Quad> parallel_result = production_circuits(L);
        auto parallel_cliques = singer::enumerate_cliques3(L);
        double t_parallel = time_of([&] { production_circuits(L); }, 3) +
                            time_of([&] { singer::enumerate_cliques3(L); }, 3);

        if (serial_result != parallel_result || serial_cliques != parallel_cliques) {
            std::fprintf(stderr, "FATAL: serial and parallel kernels disagree at V=%d\n", n);
            return 1;
        }

        double t_reference = -1;
        if (n <= 600) {
            std::vector<Quad> ref = singer::reference::chordless4_bruteforce(L);
            auto ref_cliques = singer::reference::cliques3_bruteforce(L);
            if (ref != serial_result || ref_cliques != serial_cliques) {
                std::fprintf(stderr, "FATAL: reference enumerator disagrees at V=%d\n", n);
                return 1;
            }
            t_reference = time_of([&] { singer::reference::chordless4_bruteforce(L); }, 3) +
                          time_of([&] { singer::reference::cliques3_bruteforce(L); }, 3);
        }

        char ref_col[32];
        if (t_reference < 0)
            std::snprintf(ref_col, sizeof ref_col, "%12s", "-");
        else
            std::snprintf(ref_col, sizeof ref_col, "%10.4fs", t_reference);
        std::printf("%8d %10zu %12s %10.4fs %10.4fs %8.2fx\n", n, serial_result.size(), ref_col, t_serial,
                    t_parallel, t_serial / t_parallel);
    }
    std::printf("threads: %d\n", max_threads);
    return 0;
}
