#ifndef HIDELAB_WERNER_HPP
#define HIDELAB_WERNER_HPP

#include <array>
#include <string>
#include <vector>

#include "hidelab/permutation.hpp"
#include "hidelab/rational.hpp"

namespace hidelab {

// The four expectations (r2, r22, r3, r4) of V_(12), V_(12)(34), V_(123),
// V_(1234) that characterize a permutation-symmetric invariant 4-party state.
struct ExpectationVector {
    std::array<Rational, 4> r{};  // order: r2, r22, r3, r4

    Rational& operator[](int i) { return r[i]; }
    const Rational& operator[](int i) const { return r[i]; }
    bool operator==(const ExpectationVector& o) const { return r == o.r; }

    // Expectation of a permutation with the given cycle type (identity -> 1).
    Rational on_cycle_type(const std::vector<int>& type) const;
};

ExpectationVector operator-(const ExpectationVector& a, const ExpectationVector& b);

// Fixed irrep order used for all weight vectors: [4], [3,1], [2,2], [2,1,1],
// [1,1,1,1] (trivial first, sign last).
constexpr int kNumIrreps4 = 5;
extern const std::array<const char*, kNumIrreps4> kIrrepLabels4;

struct VertexTable {
    // shapes[i]: Young diagram of irrep i
    std::array<std::vector<int>, kNumIrreps4> shapes;
    // omega[i]: chi/dim on the four nontrivial classes, same component order
    // as ExpectationVector
    std::array<ExpectationVector, kNumIrreps4> omega;
    std::array<int, kNumIrreps4> min_rows{};
    std::array<long, kNumIrreps4> dims{};
};

// The five extremal (isotypic) directions, cross-checked against
// character_table(4) at construction.
const VertexTable& vertex_table();

struct WeightSolve {
    std::array<Rational, kNumIrreps4> weights{};
    bool feasible = false;                 // all weights nonnegative
    std::vector<int> negative_irreps;      // indices of violating weights
};

// Solves the exact 5x5 system {sum w = 1, sum w*omega = r}. The system is
// invertible for the fixed vertex table; a negative weight means r is not a
// state at any dimension.
WeightSolve weights_from_expectations(const ExpectationVector& r);

struct WernerState {
    ExpectationVector r;
    std::array<Rational, kNumIrreps4> weights{};

    bool valid() const;
    // Valid at dimension d: nonnegative weights, and zero weight on every
    // irrep with more than d rows (such isotypic components vanish).
    bool valid_at(int d) const;
    int min_dimension() const;  // throws invalid_input when not valid
};

WernerState state_from_expectations(const ExpectationVector& r);
WernerState state_from_weights(const std::array<Rational, kNumIrreps4>& w);

struct StatePair {
    std::string name;
    WernerState rho0, rho1;
    bool valid0 = false, valid1 = false;

    ExpectationVector delta() const { return rho1.r - rho0.r; }
};

// The five example pairs, expectation vectors stored verbatim; the member
// that fails vertex positivity is kept with its flag set false.
const std::vector<StatePair>& catalog_pairs();

// Lookup by name ("weakest", "single-pairs", "two-pairs", "triplets",
// "strongest"); throws invalid_input for unknown names.
const StatePair& catalog_pair(const std::string& name);

}  // namespace hidelab

#endif
