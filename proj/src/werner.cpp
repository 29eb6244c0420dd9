#include "hidelab/werner.hpp"

#include <stdexcept>

namespace hidelab {

const std::array<const char*, kNumIrreps4> kIrrepLabels4 = {"4", "31", "22", "211", "1111"};

Rational ExpectationVector::on_cycle_type(const std::vector<int>& type) const {
    if (type == std::vector<int>{1, 1, 1, 1}) return 1;
    if (type == std::vector<int>{2, 1, 1}) return r[0];
    if (type == std::vector<int>{2, 2}) return r[1];
    if (type == std::vector<int>{3, 1}) return r[2];
    if (type == std::vector<int>{4}) return r[3];
    throw std::invalid_argument("expectation: cycle type is not from S_4");
}

ExpectationVector operator-(const ExpectationVector& a, const ExpectationVector& b) {
    ExpectationVector d;
    for (int i = 0; i < 4; ++i) d[i] = a[i] - b[i];
    return d;
}

namespace {

VertexTable build_vertex_table() {
    VertexTable t;
    t.shapes = {std::vector<int>{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    const CharacterTable& ct = character_table(4);
    // Nontrivial classes in ExpectationVector component order.
    const std::array<std::vector<int>, 4> class_types = {
        std::vector<int>{2, 1, 1}, {2, 2}, {3, 1}, {4}};
    for (int i = 0; i < kNumIrreps4; ++i) {
        int row = ct.irrep_index(t.shapes[i]);
        t.dims[i] = ct.dims[row];
        t.min_rows[i] = static_cast<int>(t.shapes[i].size());
        for (int c = 0; c < 4; ++c)
            t.omega[i][c] = Rational(ct.chi[row][class_index_of(4, class_types[c])], ct.dims[row]);
    }
    return t;
}

// Solves M x = rhs for the fixed 5x5 system by exact Gaussian elimination.
std::array<Rational, kNumIrreps4> solve5(const ExpectationVector& r) {
    const VertexTable& vt = vertex_table();
    Rational m[5][6];
    for (int j = 0; j < 5; ++j) m[0][j] = 1;  // weights sum to one
    m[0][5] = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 5; ++j) m[i + 1][j] = vt.omega[j][i];
        m[i + 1][5] = r[i];
    }
    for (int col = 0; col < 5; ++col) {
        int pivot = -1;
        for (int row = col; row < 5; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("vertex system is singular");
        if (pivot != col)
            for (int j = 0; j < 6; ++j) std::swap(m[pivot][j], m[col][j]);
        for (int row = 0; row < 5; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (int j = col; j < 6; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::array<Rational, kNumIrreps4> x;
    for (int i = 0; i < 5; ++i) x[i] = m[i][5] / m[i][i];
    return x;
}

ExpectationVector expectations_from_weights(const std::array<Rational, kNumIrreps4>& w) {
    const VertexTable& vt = vertex_table();
    ExpectationVector r;
    for (int c = 0; c < 4; ++c) {
        Rational acc = 0;
        for (int i = 0; i < kNumIrreps4; ++i) acc += w[i] * vt.omega[i][c];
        r[c] = acc;
    }
    return r;
}

}  // namespace

const VertexTable& vertex_table() {
    static const VertexTable t = build_vertex_table();
    return t;
}

WeightSolve weights_from_expectations(const ExpectationVector& r) {
    WeightSolve out;
    out.weights = solve5(r);
    out.feasible = true;
    for (int i = 0; i < kNumIrreps4; ++i)
        if (out.weights[i] < 0) {
            out.feasible = false;
            out.negative_irreps.push_back(i);
        }
    return out;
}

bool WernerState::valid() const {
    for (const Rational& w : weights)
        if (w < 0) return false;
    return true;
}

bool WernerState::valid_at(int d) const {
    if (!valid() || d < 1) return false;
    const VertexTable& vt = vertex_table();
    for (int i = 0; i < kNumIrreps4; ++i)
        if (weights[i] != 0 && vt.min_rows[i] > d) return false;
    return true;
}

int WernerState::min_dimension() const {
    if (!valid()) throw invalid_input("min_dimension: state is not a valid state");
    const VertexTable& vt = vertex_table();
    int d = 1;
    for (int i = 0; i < kNumIrreps4; ++i)
        if (weights[i] != 0) d = std::max(d, vt.min_rows[i]);
    return d;
}

WernerState state_from_expectations(const ExpectationVector& r) {
    WernerState s;
    s.r = r;
    s.weights = weights_from_expectations(r).weights;
    return s;
}

WernerState state_from_weights(const std::array<Rational, kNumIrreps4>& w) {
    Rational sum = 0;
    for (const Rational& wi : w) sum += wi;
    if (sum != 1) throw std::invalid_argument("state weights must sum to 1");
    WernerState s;
    s.weights = w;
    s.r = expectations_from_weights(w);
    return s;
}

namespace {

StatePair make_pair(const std::string& name, const std::array<Rational, 4>& r0,
                    const std::array<Rational, 4>& r1) {
    StatePair p;
    p.name = name;
    p.rho0 = state_from_expectations(ExpectationVector{r0});
    p.rho1 = state_from_expectations(ExpectationVector{r1});
    p.valid0 = p.rho0.valid();
    p.valid1 = p.rho1.valid();
    return p;
}

}  // namespace

const std::vector<StatePair>& catalog_pairs() {
    static const std::vector<StatePair> pairs = [] {
        const Rational third(1, 3);
        std::vector<StatePair> v;
        v.push_back(make_pair("weakest", {1, 1, 1, 1}, {-1, 1, 1, -1}));
        v.push_back(make_pair("single-pairs", {-third, -third, 0, third},
                              {-third, 1, 0, -third}));
        v.push_back(make_pair("two-pairs", {0, 1, 1, 0}, {0, 1, Rational(-1, 2), 0}));
        v.push_back(make_pair("triplets", {1, third, 0, 1}, {third, -third, 0, -third}));
        v.push_back(make_pair("strongest", {0, 0, Rational(1, 4), Rational(1, 2)},
                              {0, 0, Rational(1, 4), Rational(-1, 2)}));
        return v;
    }();
    return pairs;
}

const StatePair& catalog_pair(const std::string& name) {
    for (const StatePair& p : catalog_pairs())
        if (p.name == name) return p;
    throw invalid_input("unknown pair name: " + name);
}

}  // namespace hidelab
