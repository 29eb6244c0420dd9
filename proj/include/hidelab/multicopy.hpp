#ifndef HIDELAB_MULTICOPY_HPP
#define HIDELAB_MULTICOPY_HPP

#include <string>
#include <vector>

#include "hidelab/certify.hpp"
#include "hidelab/partition.hpp"
#include "hidelab/werner.hpp"

namespace hidelab {

// Plan for distinguishing two binomial outcome distributions with K copies
// by a count threshold: guess the larger-p state when the count of
// outcome-1 results is >= threshold. `error` is the worst case of the two
// misidentification probabilities for the best deterministic threshold;
// `randomized_error` additionally randomizes the boundary count (the
// minimax value, non-increasing in K, unlike the deterministic one which
// can tick up on even/odd parity).
struct BoostPlan {
    double p0 = 0.0, p1 = 0.0;
    int copies = 0;
    int threshold = 0;
    bool swapped = false;  // p0 > p1 on input; roles were flipped internally
    double error = 1.0;
    double randomized_error = 1.0;
};

BoostPlan discrimination_error(double p0, double p1, int copies);

// Smallest K with discrimination error (deterministic threshold) <= eps.
int required_copies(double p0, double p1, double eps);

struct BipartiteQualities {
    double eps1 = 0.0;  // 1 - (1 - 1/d)^K
    double eps2 = 0.0;  // 2^-K
};

BipartiteQualities bipartite_qualities(int d, int K);

// Dense verification of the closed forms on (C^d x C^d)^{tensor K}:
// eps1_dense is the optimal PPT-constrained bias, the sum of positive
// eigenvalues of Theta_right(rho1_hat - rho0_hat) (the raw trace norm is
// twice that, since the difference is traceless); the analyzer A =
// P_plus^{tensor K} gives tr(rho1_hat A) = 1 and tr(rho0_hat A) = 2^-K.
struct BipartiteDenseCheck {
    int d = 0, K = 0;
    double eps1_dense = 0.0;
    double trace_norm_dense = 0.0;  // ||Theta_right(difference)||_1
    double tr_rho1_A = 0.0;
    double tr_rho0_A = 0.0;
    double eps2_dense = 0.0;  // 1 - (tr_rho1_A - tr_rho0_A)
};

BipartiteDenseCheck bipartite_dense_check(int d, int K);

// Recorded separability certificate for the specific states of the
// bipartite scheme: the flip expectation tr(rho F) is nonnegative exactly
// for separable Werner states, and the partial transpose stays positive.
struct SeparabilityEntry {
    std::string state;
    double flip_expectation = 0.0;
    double ppt_min_eigenvalue = 0.0;
    bool separable = false;
};

std::vector<SeparabilityEntry> separability_certificate(int d);

// D x hiding_bound: appending a maximally entangled D-pair across the cut
// multiplies the partial-transpose trace norm by ||Theta(Omega_D)||_1 = D.
double assisted_bound(const StatePair& pair, const SitePartition& P, int d, int D);

// Dense verification of the factorization on the extended system (guarded
// small sizes): returns min over the nontrivial compatible subsets of
// ||Theta_{S + Omega half}(Delta x Omega_D)||_1.
double assisted_bound_dense(const StatePair& pair, const SitePartition& P, int d, int D);

}  // namespace hidelab

#endif
