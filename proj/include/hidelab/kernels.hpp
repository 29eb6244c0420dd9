#ifndef HIDELAB_KERNELS_HPP
#define HIDELAB_KERNELS_HPP

#include <cstdint>
#include <vector>

namespace hidelab::kernels {

// Data-parallel inner loops of the dense backend. Every OpenMP kernel has a
// *_serial twin with identical loop bodies; the test suite asserts they
// agree and tools/hidelab_bench compares their throughput.

// Entry permutation implementing a partial transpose: for composite indices
// (r, c) over site dimensions `dims`, out[r,c] = in[r',c'] where the indices
// of the sites in `site_mask` are swapped between row and column.
void partial_transpose(const double* in, double* out, const std::vector<int>& dims,
                       std::uint32_t site_mask);
void partial_transpose_serial(const double* in, double* out, const std::vector<int>& dims,
                              std::uint32_t site_mask);

// Scatter-add of a permutation operator: a[perm_row[c], c] += coeff.
void add_scaled_permutation(double* a, long side, const std::vector<long>& perm_row,
                            double coeff);
void add_scaled_permutation_serial(double* a, long side, const std::vector<long>& perm_row,
                                   double coeff);

// tr(V_p A) = sum_c A[perm_row[c], c].
double permutation_trace_product(const double* a, long side, const std::vector<long>& perm_row);
double permutation_trace_product_serial(const double* a, long side,
                                        const std::vector<long>& perm_row);

// Eigenvalues of a symmetric matrix (row-major, side n), ascending.
std::vector<double> sym_eigenvalues(std::vector<double> a, long n);
// Full decomposition; on return `a` holds the eigenvectors row-wise as
// returned by LAPACK (row i of memory = eigenvector matrix row).
std::vector<double> sym_eigendecompose(std::vector<double>& a, long n);
// Rebuilds Q diag(w) Q^T from the output of sym_eigendecompose.
std::vector<double> sym_reconstruct(const std::vector<double>& vectors,
                                    const std::vector<double>& eigenvalues, long n);

// Singular values, descending.
std::vector<double> singular_values(std::vector<double> a, long n);

}  // namespace hidelab::kernels

#endif
