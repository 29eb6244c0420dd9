// Throughput comparison of the OpenMP kernels against their serial
// reference twins, plus the eigensolver cost that dominates certification.

#include <omp.h>

#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "hidelab/dense.hpp"
#include "hidelab/kernels.hpp"

using namespace hidelab;

namespace {

double time_of(const std::function<void()>& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

}  // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-28s %6s %10s %10s %8s\n", "kernel", "d", "serial[s]", "omp[s]", "speedup");

    for (int d : {4, 6, 7}) {
        const std::vector<int> dims(4, d);
        DenseOperator X = zero_operator(dims);
        std::mt19937_64 gen(11);
        std::normal_distribution<double> dist;
        for (double& v : X.a) v = dist(gen);
        DenseOperator Y = X;

        double ts = time_of([&] { kernels::partial_transpose_serial(X.a.data(), Y.a.data(),
                                                                    dims, 0b0011); }, 3);
        double tp = time_of([&] { kernels::partial_transpose(X.a.data(), Y.a.data(), dims,
                                                             0b0011); }, 3);
        std::printf("%-28s %6d %10.4f %10.4f %8.2f\n", "partial_transpose", d, ts, tp, ts / tp);

        const auto row = permutation_row_table(all_permutations(4)[5], d);
        ts = time_of([&] { kernels::permutation_trace_product_serial(X.a.data(), X.side, row); },
                     5);
        tp = time_of([&] { kernels::permutation_trace_product(X.a.data(), X.side, row); }, 5);
        std::printf("%-28s %6d %10.4f %10.4f %8.2f\n", "permutation_trace_product", d, ts, tp,
                    ts / tp);
    }

    std::printf("\n%-28s %6s %10s\n", "eigensolver", "side", "time[s]");
    for (int d : {4, 5, 6, 7}) {
        long side = 1;
        for (int k = 0; k < 4; ++k) side *= d;
        std::vector<double> a(side * side);
        std::mt19937_64 gen(13);
        std::normal_distribution<double> dist;
        for (long i = 0; i < side; ++i)
            for (long j = 0; j <= i; ++j) {
                double v = dist(gen);
                a[i * side + j] = v;
                a[j * side + i] = v;
            }
        double t = time_of([&] { kernels::sym_eigenvalues(a, side); }, 1);
        std::printf("%-28s %6ld %10.3f\n", "sym_eigenvalues", side, t);
    }
    return 0;
}
