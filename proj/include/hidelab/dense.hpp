#ifndef HIDELAB_DENSE_HPP
#define HIDELAB_DENSE_HPP

#include <array>
#include <map>
#include <vector>

#include "hidelab/partition.hpp"
#include "hidelab/permutation.hpp"
#include "hidelab/rational.hpp"
#include "hidelab/werner.hpp"

namespace hidelab {

// Dense real operator on a tensor product of sites. Every operator in scope
// (permutation operators, invariant states, their partial transposes) is
// real in the computational basis.
struct DenseOperator {
    std::vector<int> dims;  // per-site dimensions, last site fastest
    long side = 0;
    std::vector<double> a;  // row-major, side x side

    double& at(long r, long c) { return a[r * side + c]; }
    double at(long r, long c) const { return a[r * side + c]; }
    int sites() const { return static_cast<int>(dims.size()); }
};

// Largest supported matrix side (d^N for uniform sites). Above this the
// constructors throw instead of allocating.
constexpr long kDenseSideGuard = 10000;

DenseOperator zero_operator(const std::vector<int>& dims);
DenseOperator identity_operator(const std::vector<int>& dims);

double trace(const DenseOperator& X);
double frobenius_norm(const DenseOperator& X);
bool is_symmetric(const DenseOperator& X, double tol = 1e-12);

DenseOperator operator+(const DenseOperator& X, const DenseOperator& Y);
DenseOperator operator-(const DenseOperator& X, const DenseOperator& Y);
DenseOperator operator*(double s, const DenseOperator& X);

// Row index of the single unit entry in column c of V_p at site dimension d:
// V_p maps |i_0..i_{n-1}> to the basis vector whose p(k)-th index is i_k.
std::vector<long> permutation_row_table(const Permutation& p, int d);

// The permutation operator V_p on (C^d)^{tensor n}; tr V_p = d^{#cycles}.
DenseOperator perm_operator(const Permutation& p, int d);

// Dense form of a linear combination sum_k coeffs[k] V_{perm k} over
// all_permutations(n) at site dimension d.
DenseOperator dense_from_coefficients(int n, const std::vector<double>& coeffs, int d);

// rho = sum_lambda w_lambda Q_lambda / tr Q_lambda. Throws invalid_input
// when the state is not valid at d (some weighted isotypic component
// vanishes).
DenseOperator state_operator(const WernerState& state, int d);

// rho1 - rho0 as a dense operator; both members must be valid at d.
DenseOperator pair_difference_operator(const StatePair& pair, int d);

DenseOperator partial_transpose(const DenseOperator& X, const SiteSubset& S);

// tr(V_p A), computed by summing the matched entries (O(side)).
double perm_trace_product(const DenseOperator& A, const Permutation& p);

// Sum of absolute eigenvalues for symmetric input, singular values otherwise.
double trace_norm(const DenseOperator& X);
double operator_norm(const DenseOperator& X);
// Sum of positive eigenvalues (symmetric input): max of tr(XB) over 0<=B<=1.
double positive_part_trace(const DenseOperator& X);
std::vector<double> eigenvalues(const DenseOperator& X);  // symmetric only

DenseOperator kron(const DenseOperator& A, const DenseOperator& B);
DenseOperator flip_operator(int d);                  // F|ij> = |ji>
DenseOperator maximally_entangled_projector(int D);  // |Omega><Omega|

// Gram matrix M[p,s] = d^{#cycles(p^-1 s) - 4} of the 24 permutation
// operators of S_4, exact; invertible iff d >= 4.
struct GramMatrix {
    int d = 0;
    std::array<std::array<Rational, 24>, 24> entries{};
};

GramMatrix gram_matrix(int d);
Rational gram_determinant(const GramMatrix& M);
// Exact inverse; throws invalid_input when singular (d < 4).
std::array<std::array<Rational, 24>, 24> gram_inverse(const GramMatrix& M);

struct CoefficientRecovery {
    std::vector<double> coeffs;  // aligned with all_permutations(4)
    double residual = 0.0;       // Frobenius norm of A - sum a_p V_p
};

// a = M^{-1} t with t_p = d^{-4} tr(V_p^* A); requires d >= 4. When
// `require_in_span`, throws invalid_input if the reconstruction residual
// exceeds 1e-8 * max(1, ||A||_F).
CoefficientRecovery recover_coefficients(const DenseOperator& A, int d,
                                         bool require_in_span = true);

}  // namespace hidelab

#endif
