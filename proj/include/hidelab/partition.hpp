#ifndef HIDELAB_PARTITION_HPP
#define HIDELAB_PARTITION_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hidelab/permutation.hpp"

namespace hidelab {

// A subset of the n sites, stored as a bitmask over bits 0..n-1.
struct SiteSubset {
    int n = 0;
    std::uint32_t mask = 0;

    std::uint32_t full_mask() const { return (1u << n) - 1u; }
    SiteSubset complement() const { return {n, full_mask() ^ mask}; }
    int count() const;
    bool contains(int site) const { return (mask >> site) & 1u; }
    // Canonical pick among {S, complement(S)}: the numerically smaller mask.
    SiteSubset representative() const;
    std::vector<int> members() const;
    std::string to_string() const;  // 1-based, e.g. "{1,3}"; empty set "{}"

    bool operator==(const SiteSubset& o) const { return n == o.n && mask == o.mask; }
    bool operator<(const SiteSubset& o) const { return mask < o.mask; }
};

// A set partition of the n sites. Canonical form: blocks sorted by their
// minimum element.
class SitePartition {
public:
    SitePartition() = default;
    SitePartition(int n, std::vector<std::uint32_t> blocks);

    // Parses the CLI syntax "12|34" (1-based site digits).
    static SitePartition parse(const std::string& text, int n);

    int sites() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::uint32_t>& blocks() const { return blocks_; }

    std::string to_string() const;  // canonical "12|34" form

    // Block sizes sorted descending (an integer partition of n).
    std::vector<int> type() const;

    bool refines(const SitePartition& coarser) const;
    bool is_adapted(const Permutation& p) const;

    // All unions of blocks, 2^{num_blocks} subsets including empty and full.
    std::vector<SiteSubset> compatible_subsets() const;
    // Deduplicated up to complement; `include_trivial` keeps the empty/full
    // class (as the empty set).
    std::vector<SiteSubset> compatible_representatives(bool include_trivial) const;

    // The subgroup of permutations mapping every block into itself.
    std::vector<Permutation> adapted_permutations() const;

    bool operator==(const SitePartition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator<(const SitePartition& o) const { return blocks_ < o.blocks_; }

private:
    int n_ = 0;
    std::vector<std::uint32_t> blocks_;
};

// All set partitions of n sites in a deterministic order (15 for n=4).
std::vector<SitePartition> enumerate_partitions(int n);

using PartitionType = std::vector<int>;

PartitionType parse_partition_type(const std::string& digits);  // "211" -> {2,1,1}
std::string partition_type_to_string(const PartitionType& t);

// Type-level refinement order for n=4, the transitive closure of
//   [1111] < [211] < [22], [211] < [31], [22] < [4], [31] < [4].
// [22] and [31] are incomparable.
bool type_refines(const PartitionType& finer, const PartitionType& coarser);

// True iff the set is closed under taking finer types in the order above.
bool down_closure_valid(const std::set<PartitionType>& types);

}  // namespace hidelab

#endif
