#ifndef HIDELAB_CERTIFY_HPP
#define HIDELAB_CERTIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "hidelab/dense.hpp"
#include "hidelab/partition.hpp"
#include "hidelab/werner.hpp"

namespace hidelab {

// Coefficients a_p over the 24 permutations of S_4, aligned with
// all_permutations(4).
struct AnalyzingOperator {
    std::vector<double> coeffs = std::vector<double>(24, 0.0);

    static AnalyzingOperator zero();
    static AnalyzingOperator identity_op();
    // (1/|H|) sum_{h in H} V_h for a list of permutations.
    static AnalyzingOperator symmetrizer(const std::vector<Permutation>& subgroup);
    static AnalyzingOperator from_terms(
        const std::vector<std::pair<Permutation, double>>& terms);

    double& coeff(const Permutation& p);
    double coeff(const Permutation& p) const;
    // Hermitian iff a_p = a_{p^-1} for every p (V_p^T = V_{p^-1}).
    bool is_hermitian(double tol = 1e-12) const;
    // True iff every nonzero coefficient sits on a permutation adapted to P.
    bool adapted_to(const SitePartition& P, double tol = 0.0) const;
};

constexpr double kAdmissibilityTol = 1e-9;

struct SpectralMargin {
    SiteSubset subset;  // representative (subset or its complement)
    double min_eig = 0.0;
    double max_eig = 0.0;
};

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<SpectralMargin> margins;  // one per compatible representative
    std::string note;
    // Worst violation of [0,1] across all checked spectra (0 when inside).
    double worst_violation() const;
};

// Dense spectra of Theta_S(A) for all compatible representatives of P
// (including the trivial class, i.e. the plain 0 <= A <= 1 box).
AdmissibilityReport check_admissible(const AnalyzingOperator& A, const SitePartition& P,
                                     int d);

// tr((rho1 - rho0) A) by the closed-form class traces; no dense matrices.
double witness_value(const StatePair& pair, const AnalyzingOperator& A, int d);

// min over nontrivial compatible S (up to complement) of the dense
// ||Theta_S(rho1 - rho0)||_1. For the full one-block partition, where no
// nontrivial compatible subset exists, the trivial Theta_empty bound
// ||rho1 - rho0||_1 is returned.
double hiding_bound(const StatePair& pair, const SitePartition& P, int d);

// ||Theta_S(rho1-rho0)||_1 keyed by representative mask (0..7 for n=4);
// mask 0 holds the trivial ||Delta||_1. classify_pair shares this across
// partitions.
std::map<std::uint32_t, double> subset_norm_cache(const StatePair& pair, int d);

// Exact value of the best admissible witness supported on permutations
// adapted to P: sum over the present isotypic components mu of the adapted
// group of max(0, tr(Delta P_mu)). The projected ascent below saturates to
// this value.
Rational adapted_witness_optimum(const StatePair& pair, const SitePartition& P, int d);

struct WitnessSearchResult {
    AnalyzingOperator op;
    double value = 0.0;       // tr(Delta A) of the returned operator
    Rational exact_value;     // same value in exact arithmetic
    AdmissibilityReport admissibility;
};

// Projected ascent over operators supported on the permutations adapted to
// P: gradient step on the coefficients (the gradient is the vector of Delta
// expectations per class), spectral projection onto [0,1], coefficient
// re-extraction. Seeded with the best subgroup symmetrizer. The iteration
// runs in the conjugation-invariant eigenvalue coordinates of the adapted
// algebra, where the spectral projection is an exact clamp; see
// optimize_witness_dense_reference for the equivalent dense-matrix loop.
WitnessSearchResult optimize_witness(const StatePair& pair, const SitePartition& P, int d,
                                     int iterations = 200,
                                     const Rational& step = Rational(1, 8));

// Reference implementation of the same ascent on dense matrices
// (eigendecompose, clamp, rebuild, re-extract coefficients via the Gram
// inverse). Used by the tests to validate optimize_witness; requires d >= 4.
double optimize_witness_dense_reference(const StatePair& pair, const SitePartition& P, int d,
                                        int iterations = 200, double step = 0.125);

enum class Verdict { hiding, revealing, indeterminate };

std::string verdict_to_string(Verdict v);

struct ReportRow {
    SitePartition partition;
    double hiding_bound = 0.0;
    double witness_value = 0.0;
    Verdict verdict = Verdict::indeterminate;
    AnalyzingOperator witness;
    double witness_violation = 0.0;  // worst admissibility violation, 0 when verified
};

struct QualityReport {
    std::string pair_name;
    int d = 0;
    double eps1 = 0.0, eps2 = 0.0;
    std::vector<ReportRow> rows;  // all 15 partitions, enumerate_partitions order
    std::vector<std::string> notes;

    const ReportRow& row_for(const SitePartition& P) const;
};

// Verdicts: revealing when the optimized witness reaches 1 - eps2, hiding
// when the PPT bound is at most eps1, indeterminate otherwise (legal at
// small d). eps1 < 0 selects the default 5/d; eps2 < 0 selects 1e-6.
QualityReport classify_pair(const StatePair& pair, int d, double eps1 = -1.0,
                            double eps2 = -1.0, int iterations = 200,
                            bool verify_witnesses = true);

struct DecayRow {
    int d = 0;
    double max_nonadapted = 0.0;  // max |a_p| over p not adapted to P
    double witness_value = 0.0;
    double feasibility_violation = 0.0;  // worst spectral violation of the result
};

struct DecayTable {
    std::string pair_name;
    SitePartition partition;
    std::vector<DecayRow> rows;
};

// For each d, optimizes an admissible witness over the full 24-coefficient
// span (gradient ascent with alternating spectral projections onto the
// boxes 0 <= Theta_S(A) <= 1) and records the size of the largest
// coefficient on a non-adapted permutation. Requires d >= 4 for the
// coefficient extraction.
DecayTable coefficient_decay(const SitePartition& P, const std::vector<int>& d_values,
                             const StatePair& pair = catalog_pair("strongest"),
                             int rounds = 8, double step = 0.125);

// Least-squares slope of log(y) against log(x); used for the 1/d scaling
// checks on scans and decay tables.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hidelab

#endif
