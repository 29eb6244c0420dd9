#include "hidelab/multicopy.hpp"

#include <algorithm>
#include <cmath>

#include "hidelab/dense.hpp"

namespace hidelab {

namespace {

// P[Bin(K,p) = k], stable through lgamma for all K in scope.
double binom_pmf(int K, double p, int k) {
    if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (p >= 1.0) return k == K ? 1.0 : 0.0;
    double lg = std::lgamma(K + 1.0) - std::lgamma(k + 1.0) - std::lgamma(K - k + 1.0) +
                k * std::log(p) + (K - k) * std::log1p(-p);
    return std::exp(lg);
}

}  // namespace

BoostPlan discrimination_error(double p0, double p1, int copies) {
    if (copies < 1) throw invalid_input("discrimination_error: need at least one copy");
    if (p0 < 0.0 || p0 > 1.0 || p1 < 0.0 || p1 > 1.0)
        throw invalid_input("discrimination_error: probabilities must be in [0,1]");
    if (p0 == p1) throw invalid_input("discrimination_error: p0 = p1, no discrimination");

    BoostPlan plan;
    plan.p0 = p0;
    plan.p1 = p1;
    plan.copies = copies;
    plan.swapped = p0 > p1;
    const double q0 = plan.swapped ? p1 : p0;  // oriented: q1 > q0
    const double q1 = plan.swapped ? p0 : p1;

    std::vector<double> pmf0(copies + 1), pmf1(copies + 1);
    for (int k = 0; k <= copies; ++k) {
        pmf0[k] = binom_pmf(copies, q0, k);
        pmf1[k] = binom_pmf(copies, q1, k);
    }
    // tail0[t] = P[Bin(K,q0) >= t], cdf1[t] = P[Bin(K,q1) < t]
    std::vector<double> tail0(copies + 2, 0.0), cdf1(copies + 2, 0.0);
    for (int t = copies; t >= 0; --t) tail0[t] = tail0[t + 1] + pmf0[t];
    for (int t = 1; t <= copies + 1; ++t) cdf1[t] = cdf1[t - 1] + pmf1[t - 1];

    plan.error = 2.0;
    for (int t = 0; t <= copies + 1; ++t) {
        double err = std::max(tail0[t], cdf1[t]);
        if (err < plan.error) {
            plan.error = err;
            plan.threshold = t;
        }
    }

    // Minimax over rules that randomize at the boundary count: guess the
    // larger-p state with probability gamma when count == t.
    plan.randomized_error = plan.error;
    for (int t = 0; t <= copies; ++t) {
        // typeI(gamma) = tail0[t+1] + gamma pmf0[t], typeII = cdf1[t] + (1-gamma) pmf1[t]
        double denom = pmf0[t] + pmf1[t];
        if (denom <= 0.0) continue;
        double gamma = (cdf1[t] + pmf1[t] - tail0[t + 1]) / denom;
        gamma = std::clamp(gamma, 0.0, 1.0);
        double err = std::max(tail0[t + 1] + gamma * pmf0[t],
                              cdf1[t] + (1.0 - gamma) * pmf1[t]);
        plan.randomized_error = std::min(plan.randomized_error, err);
    }
    return plan;
}

int required_copies(double p0, double p1, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw invalid_input("required_copies: eps must be in (0,1)");
    if (p0 == p1) throw invalid_input("required_copies: p0 = p1, no discrimination");
    // Hoeffding at the midpoint threshold guarantees error <= 2 exp(-K g^2 / 2),
    // so the scan below terminates by K_sufficient.
    const double gap = std::abs(p1 - p0) / 2.0;
    const long sufficient =
        static_cast<long>(std::ceil(2.0 * std::log(2.0 / eps) / (4.0 * gap * gap))) + 2;
    for (int K = 1; K <= sufficient; ++K)
        if (discrimination_error(p0, p1, K).error <= eps) return K;
    throw std::logic_error("required_copies: sufficiency bound failed");
}

BipartiteQualities bipartite_qualities(int d, int K) {
    if (d < 2) throw invalid_input("bipartite_qualities: d must be >= 2");
    if (K < 1) throw invalid_input("bipartite_qualities: K must be >= 1");
    BipartiteQualities q;
    q.eps1 = 1.0 - std::pow(1.0 - 1.0 / d, K);
    q.eps2 = std::pow(2.0, -K);
    return q;
}

namespace {

DenseOperator kpower(const DenseOperator& X, int K) {
    DenseOperator out = X;
    for (int k = 1; k < K; ++k) out = kron(out, X);
    return out;
}

}  // namespace

BipartiteDenseCheck bipartite_dense_check(int d, int K) {
    if (d < 2 || K < 1) throw invalid_input("bipartite_dense_check: need d >= 2, K >= 1");
    BipartiteDenseCheck out;
    out.d = d;
    out.K = K;

    const DenseOperator one = identity_operator({d, d});
    const DenseOperator F = flip_operator(d);
    const double tr_plus = d * (d + 1) / 2.0, tr_minus = d * (d - 1) / 2.0;
    const DenseOperator P_plus = 0.5 * (one + F);
    const DenseOperator rho_plus = (1.0 / tr_plus) * P_plus;
    const DenseOperator rho_minus = (0.5 / tr_minus) * (one - F);
    const DenseOperator mix = 0.5 * (rho_plus + rho_minus);

    const DenseOperator rho1 = kpower(rho_plus, K);   // may throw the size guard
    const DenseOperator rho0 = kpower(mix, K);
    const DenseOperator diff = rho1 - rho0;

    std::uint32_t right_mask = 0;
    for (int k = 0; k < K; ++k) right_mask |= 1u << (2 * k + 1);
    const DenseOperator theta = partial_transpose(diff, SiteSubset{2 * K, right_mask});
    out.trace_norm_dense = trace_norm(theta);
    out.eps1_dense = positive_part_trace(theta);

    const DenseOperator A = kpower(P_plus, K);
    auto dot = [](const DenseOperator& X, const DenseOperator& Y) {
        double acc = 0.0;
        for (std::size_t i = 0; i < X.a.size(); ++i) acc += X.a[i] * Y.a[i];
        return acc;  // tr(XY) for symmetric X
    };
    out.tr_rho1_A = dot(rho1, A);
    out.tr_rho0_A = dot(rho0, A);
    out.eps2_dense = 1.0 - (out.tr_rho1_A - out.tr_rho0_A);
    return out;
}

std::vector<SeparabilityEntry> separability_certificate(int d) {
    if (d < 2) throw invalid_input("separability_certificate: d must be >= 2");
    const DenseOperator one = identity_operator({d, d});
    const DenseOperator F = flip_operator(d);
    const double tr_plus = d * (d + 1) / 2.0, tr_minus = d * (d - 1) / 2.0;
    const DenseOperator rho_plus = (0.5 / tr_plus) * (one + F);
    const DenseOperator rho_minus = (0.5 / tr_minus) * (one - F);
    const DenseOperator mix = 0.5 * (rho_plus + rho_minus);
    const DenseOperator maximally_mixed = (1.0 / (d * d)) * one;

    auto entry = [&](const std::string& name, const DenseOperator& rho) {
        SeparabilityEntry e;
        e.state = name;
        double acc = 0.0;
        for (std::size_t i = 0; i < rho.a.size(); ++i) acc += rho.a[i] * F.a[i];
        e.flip_expectation = acc;
        const DenseOperator theta = partial_transpose(rho, SiteSubset{2, 0b10});
        std::vector<double> w = eigenvalues(theta);
        e.ppt_min_eigenvalue = w.front();
        e.separable = e.flip_expectation >= -1e-12;
        return e;
    };
    return {entry("rho_plus", rho_plus), entry("equal_mixture", mix),
            entry("maximally_mixed", maximally_mixed)};
}

double assisted_bound(const StatePair& pair, const SitePartition& P, int d, int D) {
    if (D < 1) throw invalid_input("assisted_bound: D must be >= 1");
    return D * hiding_bound(pair, P, d);
}

double assisted_bound_dense(const StatePair& pair, const SitePartition& P, int d, int D) {
    if (D < 1) throw invalid_input("assisted_bound_dense: D must be >= 1");
    const DenseOperator delta = pair_difference_operator(pair, d);
    const DenseOperator omega = maximally_entangled_projector(D);
    const DenseOperator ext = kron(delta, omega);  // sites d,d,d,d,D,D
    const auto reps = P.compatible_representatives(false);
    double best = -1.0;
    if (reps.empty()) {
        // Full partition: the trivial bound; the appended pair is untouched.
        return trace_norm(ext);
    }
    for (const SiteSubset& S : reps) {
        // One half of the entangled pair sits on the transposed side.
        SiteSubset extended{6, S.mask | (1u << 4)};
        double v = trace_norm(partial_transpose(ext, extended));
        if (best < 0.0 || v < best) best = v;
    }
    return best;
}

}  // namespace hidelab
