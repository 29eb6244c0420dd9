#include "hidelab/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hidelab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1 || n > kMaxSites)
        throw std::invalid_argument("permutation size must be in [1," +
                                    std::to_string(kMaxSites) + "]");
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("permutation images must be a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, const std::vector<int>& sites) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    const int k = static_cast<int>(sites.size());
    for (int i = 0; i < k; ++i) im[sites[i]] = sites[(i + 1) % k];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(size(), false);
    std::vector<int> type;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

int Permutation::escape_count(std::uint32_t subset_mask) const {
    int count = 0;
    for (int i = 0; i < size(); ++i)
        if ((subset_mask >> i & 1u) && !(subset_mask >> images_[i] & 1u)) ++count;
    return count;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        out += '(';
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            out += static_cast<char>('1' + j);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(p.size());
    for (int i = 0; i < p.size(); ++i) im[i] = p(q(i));
    return Permutation(std::move(im));
}

const std::vector<Permutation>& all_permutations(int n) {
    if (n < 1 || n > kMaxSites)
        throw std::invalid_argument("all_permutations: n out of range");
    static std::vector<std::vector<Permutation>> cache(kMaxSites + 1);
    auto& list = cache[n];
    if (list.empty()) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        do {
            list.emplace_back(im);
        } while (std::next_permutation(im.begin(), im.end()));
    }
    return list;
}

int permutation_index(const Permutation& p) {
    const auto& list = all_permutations(p.size());
    auto it = std::lower_bound(list.begin(), list.end(), p);
    return static_cast<int>(it - list.begin());
}

const std::vector<ConjugacyClass>& conjugacy_classes(int n) {
    static std::vector<std::vector<ConjugacyClass>> cache(kMaxSites + 1);
    auto& classes = cache[n];
    if (classes.empty()) {
        std::map<std::vector<int>, std::vector<int>> by_type;
        const auto& perms = all_permutations(n);
        for (int i = 0; i < static_cast<int>(perms.size()); ++i)
            by_type[perms[i].cycle_type()].push_back(i);
        for (auto& [type, members] : by_type)
            classes.push_back(ConjugacyClass{type, members});
    }
    return classes;
}

int class_index_of(int n, const std::vector<int>& cycle_type) {
    const auto& classes = conjugacy_classes(n);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        if (classes[c].cycle_type == cycle_type) return c;
    throw std::invalid_argument("unknown cycle type");
}

long irrep_dimension(const std::vector<int>& shape) {
    // dim = n! / product of hook lengths
    long n = 0;
    for (int r : shape) n += r;
    long factorial = 1;
    for (long k = 2; k <= n; ++k) factorial *= k;
    long hooks = 1;
    const int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < rows; ++k)
                if (shape[k] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    return factorial / hooks;
}

long schur_weyl_multiplicity(const std::vector<int>& shape, int d) {
    if (static_cast<int>(shape.size()) > d) return 0;
    long num = 1, den = 1;
    const int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape[i]; ++j) {
            num *= d + j - i;
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < rows; ++k)
                if (shape[k] > j) ++leg;
            den *= arm + leg + 1;
        }
    return num / den;  // hook content formula divides exactly
}

int CharacterTable::irrep_index(const std::vector<int>& shape) const {
    for (int i = 0; i < num_irreps(); ++i)
        if (irreps[i] == shape) return i;
    throw std::invalid_argument("unknown irrep shape");
}

long CharacterTable::chi_of_perm(int irrep, const Permutation& p) const {
    return chi[irrep][class_index_of(n, p.cycle_type())];
}

namespace {

struct RawTable {
    std::vector<std::vector<int>> shapes;
    // rows follow `shapes`, columns follow conjugacy_classes(n) order
    std::vector<std::vector<long>> chi;
};

// Class order for reference (ascending lex on descending shapes):
//   n=4: [1111] [211] [22] [31] [4]
//   n=5: [11111] [2111] [221] [311] [32] [41] [5]
RawTable raw_table(int n) {
    switch (n) {
        case 1:
            return {{{1}}, {{1}}};
        case 2:
            return {{{1, 1}, {2}}, {{1, -1}, {1, 1}}};
        case 3:
            return {{{1, 1, 1}, {2, 1}, {3}},
                    {{1, -1, 1}, {2, 0, -1}, {1, 1, 1}}};
        case 4:
            return {{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
                    {{1, -1, 1, 1, -1},
                     {3, -1, -1, 0, 1},
                     {2, 0, 2, -1, 0},
                     {3, 1, -1, 0, -1},
                     {1, 1, 1, 1, 1}}};
        case 5:
            return {{{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}},
                    {{1, -1, 1, 1, -1, -1, 1},
                     {4, -2, 0, 1, 1, 0, -1},
                     {5, -1, 1, -1, -1, 1, 0},
                     {6, 0, -2, 0, 0, 0, 1},
                     {5, 1, 1, -1, 1, -1, 0},
                     {4, 2, 0, 1, -1, 0, -1},
                     {1, 1, 1, 1, 1, 1, 1}}};
        default:
            throw std::invalid_argument("character_table: only n <= 5 supported");
    }
}

CharacterTable build_table(int n) {
    RawTable raw = raw_table(n);
    CharacterTable t;
    t.n = n;
    t.irreps = raw.shapes;
    t.chi = raw.chi;
    const auto& classes = conjugacy_classes(n);
    const int nc = static_cast<int>(classes.size());
    if (static_cast<int>(t.irreps.size()) != nc)
        throw std::logic_error("character table: irrep/class count mismatch");

    long order = 1;
    for (long k = 2; k <= n; ++k) order *= k;

    long dim_sq = 0;
    for (int i = 0; i < nc; ++i) {
        long dim = irrep_dimension(t.irreps[i]);
        if (t.chi[i][0] != dim)
            throw std::logic_error("character table: chi(e) != hook dimension");
        t.dims.push_back(dim);
        dim_sq += dim * dim;
    }
    if (dim_sq != order) throw std::logic_error("character table: sum dim^2 != n!");

    // Exact row orthogonality (characters of S_n are real integers).
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            long acc = 0;
            for (int c = 0; c < nc; ++c)
                acc += t.chi[i][c] * t.chi[j][c] * classes[c].size();
            if (acc != (i == j ? order : 0))
                throw std::logic_error("character table: row orthogonality failed");
        }
    // Column orthogonality.
    for (int c = 0; c < nc; ++c)
        for (int cp = 0; cp < nc; ++cp) {
            long acc = 0;
            for (int i = 0; i < nc; ++i) acc += t.chi[i][c] * t.chi[i][cp];
            long expect = (c == cp) ? order / classes[c].size() : 0;
            if (acc != expect)
                throw std::logic_error("character table: column orthogonality failed");
        }
    return t;
}

}  // namespace

const CharacterTable& character_table(int n) {
    if (n < 1 || n > kMaxSites)
        throw std::invalid_argument("character_table: only n <= 5 supported");
    static std::vector<CharacterTable> cache(kMaxSites + 1);
    auto& t = cache[n];
    if (t.n == 0) t = build_table(n);
    return t;
}

}  // namespace hidelab
