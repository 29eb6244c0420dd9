#include "hidelab/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hidelab/kernels.hpp"

namespace hidelab {

namespace {

long checked_side(const std::vector<int>& dims) {
    long side = 1;
    for (int d : dims) {
        if (d < 1) throw invalid_input("site dimension must be >= 1");
        side *= d;
        if (side > kDenseSideGuard)
            throw invalid_input("dense guard exceeded: matrix side " + std::to_string(side) +
                                " > " + std::to_string(kDenseSideGuard));
    }
    return side;
}

void check_same_shape(const DenseOperator& X, const DenseOperator& Y) {
    if (X.dims != Y.dims) throw std::invalid_argument("dense operands have different shapes");
}

}  // namespace

DenseOperator zero_operator(const std::vector<int>& dims) {
    DenseOperator X;
    X.dims = dims;
    X.side = checked_side(dims);
    X.a.assign(static_cast<std::size_t>(X.side) * X.side, 0.0);
    return X;
}

DenseOperator identity_operator(const std::vector<int>& dims) {
    DenseOperator X = zero_operator(dims);
    for (long i = 0; i < X.side; ++i) X.at(i, i) = 1.0;
    return X;
}

double trace(const DenseOperator& X) {
    double acc = 0.0;
    for (long i = 0; i < X.side; ++i) acc += X.at(i, i);
    return acc;
}

double frobenius_norm(const DenseOperator& X) {
    double acc = 0.0;
    for (double v : X.a) acc += v * v;
    return std::sqrt(acc);
}

bool is_symmetric(const DenseOperator& X, double tol) {
    for (long r = 0; r < X.side; ++r)
        for (long c = r + 1; c < X.side; ++c)
            if (std::abs(X.at(r, c) - X.at(c, r)) > tol) return false;
    return true;
}

DenseOperator operator+(const DenseOperator& X, const DenseOperator& Y) {
    check_same_shape(X, Y);
    DenseOperator Z = X;
    for (std::size_t i = 0; i < Z.a.size(); ++i) Z.a[i] += Y.a[i];
    return Z;
}

DenseOperator operator-(const DenseOperator& X, const DenseOperator& Y) {
    check_same_shape(X, Y);
    DenseOperator Z = X;
    for (std::size_t i = 0; i < Z.a.size(); ++i) Z.a[i] -= Y.a[i];
    return Z;
}

DenseOperator operator*(double s, const DenseOperator& X) {
    DenseOperator Z = X;
    for (double& v : Z.a) v *= s;
    return Z;
}

std::vector<long> permutation_row_table(const Permutation& p, int d) {
    const int n = p.size();
    long side = 1;
    for (int i = 0; i < n; ++i) side *= d;
    std::vector<long> stride(n);
    long s = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = s;
        s *= d;
    }
    std::vector<long> row(side);
    for (long c = 0; c < side; ++c) {
        long rem = c, r = 0;
        for (int k = 0; k < n; ++k) {
            long ik = rem / stride[k];
            rem %= stride[k];
            r += ik * stride[p(k)];  // index i_k lands in slot p(k)
        }
        row[c] = r;
    }
    return row;
}

DenseOperator perm_operator(const Permutation& p, int d) {
    DenseOperator X = zero_operator(std::vector<int>(p.size(), d));
    const std::vector<long> row = permutation_row_table(p, d);
    kernels::add_scaled_permutation(X.a.data(), X.side, row, 1.0);
    return X;
}

DenseOperator dense_from_coefficients(int n, const std::vector<double>& coeffs, int d) {
    const auto& perms = all_permutations(n);
    if (coeffs.size() != perms.size())
        throw std::invalid_argument("dense_from_coefficients: coefficient count mismatch");
    DenseOperator X = zero_operator(std::vector<int>(n, d));
    for (std::size_t k = 0; k < perms.size(); ++k) {
        if (coeffs[k] == 0.0) continue;
        kernels::add_scaled_permutation(X.a.data(), X.side,
                                        permutation_row_table(perms[k], d), coeffs[k]);
    }
    return X;
}

DenseOperator state_operator(const WernerState& state, int d) {
    if (!state.valid_at(d))
        throw invalid_input("state_operator: state is not valid at d=" + std::to_string(d));
    const VertexTable& vt = vertex_table();
    const CharacterTable& ct = character_table(4);
    // rho = sum_pi c(pi) V_pi with c(pi) = sum_lambda w_lambda chi_lambda(pi)
    // / (24 s_lambda(d)); Q_lambda / tr Q_lambda = (1 / (24 s_lambda)) sum_pi
    // chi_lambda(pi) V_pi.
    const auto& perms = all_permutations(4);
    std::vector<double> coeffs(perms.size());
    for (std::size_t k = 0; k < perms.size(); ++k) {
        Rational c = 0;
        for (int i = 0; i < kNumIrreps4; ++i) {
            if (state.weights[i] == 0) continue;
            long mult = schur_weyl_multiplicity(vt.shapes[i], d);
            long chi = ct.chi[ct.irrep_index(vt.shapes[i])][class_index_of(4, perms[k].cycle_type())];
            c += state.weights[i] * Rational(chi, 24 * mult);
        }
        coeffs[k] = to_double(c);
    }
    return dense_from_coefficients(4, coeffs, d);
}

DenseOperator pair_difference_operator(const StatePair& pair, int d) {
    if (!pair.rho0.valid_at(d) || !pair.rho1.valid_at(d))
        throw invalid_input("pair \"" + pair.name + "\" is not valid at d=" + std::to_string(d));
    return state_operator(pair.rho1, d) - state_operator(pair.rho0, d);
}

DenseOperator partial_transpose(const DenseOperator& X, const SiteSubset& S) {
    if (S.n != X.sites())
        throw std::invalid_argument("partial_transpose: subset site count mismatch");
    DenseOperator Y = X;
    kernels::partial_transpose(X.a.data(), Y.a.data(), X.dims, S.mask);
    return Y;
}

double perm_trace_product(const DenseOperator& A, const Permutation& p) {
    return kernels::permutation_trace_product(A.a.data(), A.side,
                                              permutation_row_table(p, A.dims[0]));
}

double trace_norm(const DenseOperator& X) {
    if (is_symmetric(X)) {
        double acc = 0.0;
        for (double w : kernels::sym_eigenvalues(X.a, X.side)) acc += std::abs(w);
        return acc;
    }
    double acc = 0.0;
    for (double s : kernels::singular_values(X.a, X.side)) acc += s;
    return acc;
}

double operator_norm(const DenseOperator& X) {
    if (is_symmetric(X)) {
        double m = 0.0;
        for (double w : kernels::sym_eigenvalues(X.a, X.side)) m = std::max(m, std::abs(w));
        return m;
    }
    std::vector<double> s = kernels::singular_values(X.a, X.side);
    return s.empty() ? 0.0 : s.front();
}

double positive_part_trace(const DenseOperator& X) {
    double acc = 0.0;
    for (double w : kernels::sym_eigenvalues(X.a, X.side))
        if (w > 0.0) acc += w;
    return acc;
}

std::vector<double> eigenvalues(const DenseOperator& X) {
    return kernels::sym_eigenvalues(X.a, X.side);
}

DenseOperator kron(const DenseOperator& A, const DenseOperator& B) {
    std::vector<int> dims = A.dims;
    dims.insert(dims.end(), B.dims.begin(), B.dims.end());
    DenseOperator Z = zero_operator(dims);
    for (long ra = 0; ra < A.side; ++ra)
        for (long rb = 0; rb < B.side; ++rb)
            for (long ca = 0; ca < A.side; ++ca)
                for (long cb = 0; cb < B.side; ++cb)
                    Z.at(ra * B.side + rb, ca * B.side + cb) = A.at(ra, ca) * B.at(rb, cb);
    return Z;
}

DenseOperator flip_operator(int d) {
    DenseOperator F = zero_operator({d, d});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) F.at(i * d + j, j * d + i) = 1.0;
    return F;
}

DenseOperator maximally_entangled_projector(int D) {
    DenseOperator P = zero_operator({D, D});
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) P.at(i * D + i, j * D + j) = 1.0 / D;
    return P;
}

GramMatrix gram_matrix(int d) {
    if (d < 1) throw invalid_input("gram_matrix: d must be >= 1");
    GramMatrix M;
    M.d = d;
    const auto& perms = all_permutations(4);
    for (int i = 0; i < 24; ++i) {
        const Permutation pinv = perms[i].inverse();
        for (int j = 0; j < 24; ++j) {
            const int c = compose(pinv, perms[j]).cycle_count();
            // d^{c-4} as an exact rational
            Rational v = 1;
            for (int k = 0; k < 4 - c; ++k) v /= d;
            M.entries[i][j] = v;
        }
    }
    return M;
}

namespace {

// Fraction-free style Gaussian elimination on rationals; returns (det, inverse).
std::pair<Rational, std::array<std::array<Rational, 24>, 24>> gram_eliminate(
    const GramMatrix& M) {
    std::array<std::array<Rational, 24>, 24> a = M.entries;
    std::array<std::array<Rational, 24>, 24> inv{};
    for (int i = 0; i < 24; ++i) inv[i][i] = 1;
    Rational det = 1;
    for (int col = 0; col < 24; ++col) {
        int pivot = -1;
        for (int row = col; row < 24; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return {0, inv};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational p = a[col][col];
        for (int j = 0; j < 24; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int row = 0; row < 24; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (int j = 0; j < 24; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return {det, inv};
}

}  // namespace

Rational gram_determinant(const GramMatrix& M) { return gram_eliminate(M).first; }

std::array<std::array<Rational, 24>, 24> gram_inverse(const GramMatrix& M) {
    auto [det, inv] = gram_eliminate(M);
    if (det == 0)
        throw invalid_input("gram matrix is singular at d=" + std::to_string(M.d) +
                            " (need d >= 4)");
    return inv;
}

CoefficientRecovery recover_coefficients(const DenseOperator& A, int d, bool require_in_span) {
    if (d < 4)
        throw invalid_input("recover_coefficients: permutation operators are dependent for d < 4");
    if (A.dims != std::vector<int>(4, d))
        throw std::invalid_argument("recover_coefficients: operator is not on (C^d)^4");
    const auto& perms = all_permutations(4);
    const double d4 = static_cast<double>(A.side);
    std::vector<double> t(24);
    for (int i = 0; i < 24; ++i) t[i] = perm_trace_product(A, perms[i]) / d4;

    const auto inv = gram_inverse(gram_matrix(d));
    CoefficientRecovery out;
    out.coeffs.assign(24, 0.0);
    for (int i = 0; i < 24; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 24; ++j) acc += to_double(inv[i][j]) * t[j];
        out.coeffs[i] = acc;
    }
    out.residual = frobenius_norm(A - dense_from_coefficients(4, out.coeffs, d));
    if (require_in_span && out.residual > 1e-8 * std::max(1.0, frobenius_norm(A)))
        throw invalid_input("recover_coefficients: input is not in the permutation span");
    return out;
}

}  // namespace hidelab
