#ifndef HIDELAB_PERMUTATION_HPP
#define HIDELAB_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hidelab {

constexpr int kMaxSites = 5;

// A permutation of {0,...,n-1} stored as its image table: site i is sent to
// images[i]. Composition is right-to-left: compose(p, q) applies q first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Builds a cycle (c0 c1 ... ck) on n sites, 0-based entries.
    static Permutation cycle(int n, const std::vector<int>& sites);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    // Cycle type as an integer partition of n, sorted descending.
    std::vector<int> cycle_type() const;
    int cycle_count() const;

    // l_S: number of sites in S (bitmask) mapped outside S.
    int escape_count(std::uint32_t subset_mask) const;

    // 1-based cycle notation, e.g. "(12)(34)"; identity prints "e".
    std::string to_cycle_string() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);

// All n! permutations in lexicographic image order; the identity is first.
const std::vector<Permutation>& all_permutations(int n);

// Index of p within all_permutations(p.size()).
int permutation_index(const Permutation& p);

struct ConjugacyClass {
    std::vector<int> cycle_type;    // sorted descending
    std::vector<int> member_index;  // indices into all_permutations(n)
    int size() const { return static_cast<int>(member_index.size()); }
};

// Classes sorted by cycle type (ascending lexicographic on the descending
// shapes), so the identity class comes first.
const std::vector<ConjugacyClass>& conjugacy_classes(int n);

int class_index_of(int n, const std::vector<int>& cycle_type);

struct CharacterTable {
    int n = 0;
    std::vector<std::vector<int>> irreps;  // Young diagram shapes, one per irrep
    std::vector<long> dims;
    // chi[irrep][cls], exact integers; class order matches conjugacy_classes(n)
    std::vector<std::vector<long>> chi;

    int num_irreps() const { return static_cast<int>(irreps.size()); }
    int irrep_index(const std::vector<int>& shape) const;
    long chi_of_perm(int irrep, const Permutation& p) const;
};

// Exact character table for n <= 5. Values are hard-coded and verified at
// construction: chi(e) = dim (hook length formula), sum of dim^2 = n!, and
// exact row and column orthogonality. Throws std::invalid_argument for n > 5.
const CharacterTable& character_table(int n);

// Hook length formula: dimension of the S_n irrep with the given shape.
long irrep_dimension(const std::vector<int>& shape);

// Hook content formula: multiplicity of the irrep `shape` of S_n in
// (C^d)^{tensor n} (the dimension of the paired Weyl module). Zero when the
// diagram has more than d rows.
long schur_weyl_multiplicity(const std::vector<int>& shape, int d);

}  // namespace hidelab

#endif
