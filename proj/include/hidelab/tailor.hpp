#ifndef HIDELAB_TAILOR_HPP
#define HIDELAB_TAILOR_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hidelab/certify.hpp"
#include "hidelab/partition.hpp"
#include "hidelab/werner.hpp"

namespace hidelab {

// A democratic (type-level) choice of hiding partitions. Must be
// down-closed; the one-block type [4] can never hide. The discrete type
// [1111] hides for every pair (only the identity is adapted), so it carries
// no revealing requirement even when absent from `hiding`.
struct HidingSpec {
    std::set<PartitionType> hiding;

    std::set<PartitionType> revealing_types() const;
    std::string to_string() const;  // "1111,211,22"
};

// Parses "1111,211,22"; the empty string is the empty spec. Validates
// down-closure and the [4] exclusion.
HidingSpec parse_hiding_spec(const std::string& csv);

// Representative partition of each type (sites 1..4: "1|2|3|4", "12|3|4",
// "12|34", "123|4", "1234").
const SitePartition& representative_partition(const PartitionType& type);

// Delta components (indices into ExpectationVector: 0=r2, 1=r22, 2=r3,
// 3=r4) that must vanish: one for each nonidentity class containing a
// permutation adapted to some hiding-type representative.
std::set<int> hiding_constraints(const HidingSpec& spec);

// Adapted nonidentity classes of the type's representative, as component
// indices; used for revealing margins.
std::set<int> adapted_components_of_type(const PartitionType& type);

struct DesignResult {
    StatePair pair;
    HidingSpec spec;
    std::map<int, Rational> constraint_residuals;   // component -> Delta value (exact 0)
    std::map<std::string, Rational> revealing_margins;  // type -> max adapted |Delta|
    int grid_denominator = 0;
    std::string provenance = "designed";

    Rational min_margin() const;
};

// Exact grid search over pairs of vertex-weight vectors (denominators 4, 8,
// 16, refined only when the coarser grid is infeasible): maximizes the
// minimum revealing margin subject to the hiding constraints holding
// exactly. Deterministic lexicographic tie-break.
DesignResult design_pair(const HidingSpec& spec);

struct VerifyReport {
    std::string pair_name;
    HidingSpec spec;
    bool constraints_hold = false;
    std::map<int, Rational> constraint_values;    // constrained components of Delta
    std::vector<int> over_hiding_components;      // unconstrained components that also vanish
    std::map<std::string, Rational> revealing_margins;
    std::vector<QualityReport> classifications;   // one per requested d
    bool hiding_bounds_decreasing = true;         // over d_list, per hiding-type partition
    bool revealing_witnesses_positive = true;
    // Copies needed to push the boosted error below eps2, per revealing-type
    // representative partition (from the last classification).
    std::map<std::string, int> boost_copies;
};

// Checks the exact zero constraints on Delta, then classifies at each d and
// confirms the verdict trends.
VerifyReport verify_catalog(const StatePair& pair, const HidingSpec& spec,
                            const std::vector<int>& d_list);

}  // namespace hidelab

#endif
