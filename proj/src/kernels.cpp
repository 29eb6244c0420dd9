#include "hidelab/kernels.hpp"

#include <lapacke.h>

#include <cblas.h>

#include <stdexcept>
#include <string>

namespace hidelab::kernels {

namespace {

// Strides for mixed-radix decomposition of a composite index, last site
// fastest (row-major tensor layout).
std::vector<long> site_strides(const std::vector<int>& dims) {
    const int n = static_cast<int>(dims.size());
    std::vector<long> stride(n);
    long s = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = s;
        s *= dims[i];
    }
    return stride;
}

long total_side(const std::vector<int>& dims) {
    long s = 1;
    for (int d : dims) s *= d;
    return s;
}

inline void check_lapack(int info, const char* what) {
    if (info != 0)
        throw std::runtime_error(std::string(what) + " failed, info=" + std::to_string(info));
}

}  // namespace

#define HIDELAB_PT_BODY(PRAGMA)                                                   \
    const int n = static_cast<int>(dims.size());                                  \
    const std::vector<long> stride = site_strides(dims);                          \
    const long side = total_side(dims);                                           \
    PRAGMA                                                                        \
    for (long r = 0; r < side; ++r) {                                             \
        long rk[8], rem = r;                                                      \
        for (int i = 0; i < n; ++i) {                                             \
            rk[i] = rem / stride[i];                                              \
            rem %= stride[i];                                                     \
        }                                                                         \
        for (long c = 0; c < side; ++c) {                                         \
            long rr = 0, cc = 0, crem = c;                                        \
            for (int i = 0; i < n; ++i) {                                         \
                long ci = crem / stride[i];                                       \
                crem %= stride[i];                                                \
                if (site_mask >> i & 1u) {                                        \
                    rr += ci * stride[i];                                         \
                    cc += rk[i] * stride[i];                                      \
                } else {                                                          \
                    rr += rk[i] * stride[i];                                      \
                    cc += ci * stride[i];                                         \
                }                                                                 \
            }                                                                     \
            out[r * side + c] = in[rr * side + cc];                               \
        }                                                                         \
    }

void partial_transpose(const double* in, double* out, const std::vector<int>& dims,
                       std::uint32_t site_mask) {
    HIDELAB_PT_BODY(_Pragma("omp parallel for schedule(static)"))
}

void partial_transpose_serial(const double* in, double* out, const std::vector<int>& dims,
                              std::uint32_t site_mask) {
    HIDELAB_PT_BODY()
}

#undef HIDELAB_PT_BODY

void add_scaled_permutation(double* a, long side, const std::vector<long>& perm_row,
                            double coeff) {
#pragma omp parallel for schedule(static)
    for (long c = 0; c < side; ++c) a[perm_row[c] * side + c] += coeff;
}

void add_scaled_permutation_serial(double* a, long side, const std::vector<long>& perm_row,
                                   double coeff) {
    for (long c = 0; c < side; ++c) a[perm_row[c] * side + c] += coeff;
}

double permutation_trace_product(const double* a, long side, const std::vector<long>& perm_row) {
    double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
    for (long c = 0; c < side; ++c) acc += a[perm_row[c] * side + c];
    return acc;
}

double permutation_trace_product_serial(const double* a, long side,
                                        const std::vector<long>& perm_row) {
    double acc = 0.0;
    for (long c = 0; c < side; ++c) acc += a[perm_row[c] * side + c];
    return acc;
}

std::vector<double> sym_eigenvalues(std::vector<double> a, long n) {
    std::vector<double> w(n);
    check_lapack(LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', static_cast<int>(n), a.data(),
                               static_cast<int>(n), w.data()),
                 "dsyev");
    return w;
}

std::vector<double> sym_eigendecompose(std::vector<double>& a, long n) {
    std::vector<double> w(n);
    check_lapack(LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', static_cast<int>(n), a.data(),
                                static_cast<int>(n), w.data()),
                 "dsyevd");
    return w;
}

std::vector<double> sym_reconstruct(const std::vector<double>& vectors,
                                    const std::vector<double>& eigenvalues, long n) {
    // Q diag(w) Q^T with Q stored column-wise per LAPACK row-major output
    // (column j of Q = eigenvector j).
    std::vector<double> scaled(vectors);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) scaled[i * n + j] *= eigenvalues[j];
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasTrans, static_cast<int>(n),
                static_cast<int>(n), static_cast<int>(n), 1.0, scaled.data(),
                static_cast<int>(n), vectors.data(), static_cast<int>(n), 0.0, out.data(),
                static_cast<int>(n));
    return out;
}

std::vector<double> singular_values(std::vector<double> a, long n) {
    std::vector<double> s(n);
    check_lapack(LAPACKE_dgesdd(LAPACK_ROW_MAJOR, 'N', static_cast<int>(n),
                                static_cast<int>(n), a.data(), static_cast<int>(n), s.data(),
                                nullptr, 1, nullptr, 1),
                 "dgesdd");
    return s;
}

}  // namespace hidelab::kernels
