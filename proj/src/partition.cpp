#include "hidelab/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "hidelab/rational.hpp"

namespace hidelab {

int SiteSubset::count() const { return std::popcount(mask); }

SiteSubset SiteSubset::representative() const {
    std::uint32_t comp = full_mask() ^ mask;
    return {n, std::min(mask, comp)};
}

std::vector<int> SiteSubset::members() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string SiteSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (contains(i)) {
            if (!first) s += ',';
            s += static_cast<char>('1' + i);
            first = false;
        }
    return s + "}";
}

SitePartition::SitePartition(int n, std::vector<std::uint32_t> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > kMaxSites)
        throw std::invalid_argument("partition: site count out of range");
    std::uint32_t covered = 0;
    for (std::uint32_t b : blocks_) {
        if (b == 0) throw std::invalid_argument("partition: empty block");
        if (b & covered) throw std::invalid_argument("partition: overlapping blocks");
        covered |= b;
    }
    if (covered != (1u << n) - 1u)
        throw std::invalid_argument("partition: blocks must cover all sites");
    std::sort(blocks_.begin(), blocks_.end(),
              [](std::uint32_t a, std::uint32_t b) { return std::countr_zero(a) < std::countr_zero(b); });
}

SitePartition SitePartition::parse(const std::string& text, int n) {
    std::vector<std::uint32_t> blocks;
    std::uint32_t current = 0;
    for (char ch : text) {
        if (ch == '|') {
            if (current == 0) throw invalid_input("partition: empty block in \"" + text + "\"");
            blocks.push_back(current);
            current = 0;
        } else if (ch >= '1' && ch < '1' + n) {
            current |= 1u << (ch - '1');
        } else {
            throw invalid_input(std::string("partition: unexpected character '") + ch + "'");
        }
    }
    if (current != 0) blocks.push_back(current);
    try {
        return SitePartition(n, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw invalid_input(std::string(e.what()) + " in \"" + text + "\"");
    }
}

std::string SitePartition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) out += '|';
        for (int i = 0; i < n_; ++i)
            if (blocks_[k] >> i & 1u) out += static_cast<char>('1' + i);
    }
    return out;
}

std::vector<int> SitePartition::type() const {
    std::vector<int> t;
    for (std::uint32_t b : blocks_) t.push_back(std::popcount(b));
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool SitePartition::refines(const SitePartition& coarser) const {
    if (n_ != coarser.n_) throw std::invalid_argument("refines: size mismatch");
    for (std::uint32_t b : blocks_) {
        bool inside = false;
        for (std::uint32_t c : coarser.blocks_)
            if ((b & c) == b) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool SitePartition::is_adapted(const Permutation& p) const {
    if (p.size() != n_) throw std::invalid_argument("is_adapted: size mismatch");
    for (std::uint32_t b : blocks_)
        for (int i = 0; i < n_; ++i)
            if ((b >> i & 1u) && !(b >> p(i) & 1u)) return false;
    return true;
}

std::vector<SiteSubset> SitePartition::compatible_subsets() const {
    const int k = num_blocks();
    std::vector<SiteSubset> out;
    out.reserve(1u << k);
    for (std::uint32_t sel = 0; sel < (1u << k); ++sel) {
        std::uint32_t mask = 0;
        for (int b = 0; b < k; ++b)
            if (sel >> b & 1u) mask |= blocks_[b];
        out.push_back({n_, mask});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SiteSubset> SitePartition::compatible_representatives(bool include_trivial) const {
    std::set<std::uint32_t> reps;
    for (const SiteSubset& s : compatible_subsets()) {
        SiteSubset r = s.representative();
        if (!include_trivial && r.mask == 0) continue;
        reps.insert(r.mask);
    }
    std::vector<SiteSubset> out;
    for (std::uint32_t m : reps) out.push_back({n_, m});
    return out;
}

std::vector<Permutation> SitePartition::adapted_permutations() const {
    std::vector<Permutation> out;
    for (const Permutation& p : all_permutations(n_))
        if (is_adapted(p)) out.push_back(p);
    return out;
}

std::vector<SitePartition> enumerate_partitions(int n) {
    if (n < 1 || n > kMaxSites)
        throw std::invalid_argument("enumerate_partitions: n out of range");
    // Restricted growth strings: a[0]=0, a[i] <= 1+max(a[0..i-1]).
    std::vector<SitePartition> out;
    std::vector<int> a(n, 0);
    while (true) {
        int num_blocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::uint32_t> blocks(num_blocks, 0);
        for (int i = 0; i < n; ++i) blocks[a[i]] |= 1u << i;
        out.emplace_back(n, std::move(blocks));

        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
            if (a[i] < cap) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartitionType parse_partition_type(const std::string& digits) {
    PartitionType t;
    for (char ch : digits) {
        if (ch < '1' || ch > '9') throw invalid_input("partition type: bad digit");
        t.push_back(ch - '0');
    }
    std::sort(t.rbegin(), t.rend());
    if (t.empty()) throw invalid_input("partition type: empty");
    return t;
}

std::string partition_type_to_string(const PartitionType& t) {
    std::string s;
    for (int v : t) s += static_cast<char>('0' + v);
    return s;
}

bool type_refines(const PartitionType& finer, const PartitionType& coarser) {
    // Small fixed Hasse diagram for n=4, transitively closed.
    static const std::map<std::string, std::vector<std::string>> coarser_of = {
        {"1111", {"1111", "211", "22", "31", "4"}},
        {"211", {"211", "22", "31", "4"}},
        {"22", {"22", "4"}},
        {"31", {"31", "4"}},
        {"4", {"4"}},
    };
    auto it = coarser_of.find(partition_type_to_string(finer));
    if (it == coarser_of.end())
        throw std::invalid_argument("type_refines: only types of n=4 supported");
    const std::string c = partition_type_to_string(coarser);
    return std::find(it->second.begin(), it->second.end(), c) != it->second.end();
}

bool down_closure_valid(const std::set<PartitionType>& types) {
    static const std::vector<std::string> all = {"1111", "211", "22", "31", "4"};
    for (const PartitionType& t : types)
        for (const std::string& finer_s : all) {
            PartitionType finer = parse_partition_type(finer_s);
            if (type_refines(finer, t) && !types.count(finer)) return false;
        }
    return true;
}

}  // namespace hidelab
