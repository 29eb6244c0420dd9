#include "hidelab/tailor.hpp"

#include <algorithm>

#include "hidelab/multicopy.hpp"

namespace hidelab {

namespace {

const std::vector<std::string> kAllTypes = {"1111", "211", "22", "31", "4"};

// Component index (into ExpectationVector) of a nonidentity S_4 class.
int component_of_class(const std::vector<int>& cycle_type) {
    if (cycle_type == std::vector<int>{2, 1, 1}) return 0;
    if (cycle_type == std::vector<int>{2, 2}) return 1;
    if (cycle_type == std::vector<int>{3, 1}) return 2;
    if (cycle_type == std::vector<int>{4}) return 3;
    throw std::invalid_argument("not a nonidentity class of S_4");
}

}  // namespace

std::set<PartitionType> HidingSpec::revealing_types() const {
    std::set<PartitionType> out;
    for (const std::string& s : kAllTypes) {
        PartitionType t = parse_partition_type(s);
        if (hiding.count(t)) continue;
        if (t == PartitionType{1, 1, 1, 1}) continue;  // hides for every pair
        out.insert(t);
    }
    return out;
}

std::string HidingSpec::to_string() const {
    std::string out;
    for (const std::string& s : kAllTypes) {
        if (!hiding.count(parse_partition_type(s))) continue;
        if (!out.empty()) out += ',';
        out += s;
    }
    return out;
}

HidingSpec parse_hiding_spec(const std::string& csv) {
    HidingSpec spec;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            spec.hiding.insert(parse_partition_type(token));
            token.clear();
        }
    };
    for (char ch : csv) {
        if (ch == ',' || ch == ' ')
            flush();
        else
            token += ch;
    }
    flush();
    for (const PartitionType& t : spec.hiding) {
        int sum = 0;
        for (int v : t) sum += v;
        if (sum != 4) throw invalid_input("hiding type must partition 4 sites: " +
                                          partition_type_to_string(t));
    }
    if (spec.hiding.count(PartitionType{4}))
        throw invalid_input("the one-block type 4 cannot be hiding");
    if (!down_closure_valid(spec.hiding))
        throw invalid_input("hiding set is not closed under refinement");
    return spec;
}

const SitePartition& representative_partition(const PartitionType& type) {
    static const std::map<std::string, SitePartition> reps = {
        {"1111", SitePartition::parse("1|2|3|4", 4)},
        {"211", SitePartition::parse("12|3|4", 4)},
        {"22", SitePartition::parse("12|34", 4)},
        {"31", SitePartition::parse("123|4", 4)},
        {"4", SitePartition::parse("1234", 4)},
    };
    auto it = reps.find(partition_type_to_string(type));
    if (it == reps.end()) throw std::invalid_argument("unknown partition type");
    return it->second;
}

std::set<int> adapted_components_of_type(const PartitionType& type) {
    std::set<int> out;
    for (const Permutation& p : representative_partition(type).adapted_permutations())
        if (!p.is_identity()) out.insert(component_of_class(p.cycle_type()));
    return out;
}

std::set<int> hiding_constraints(const HidingSpec& spec) {
    std::set<int> out;
    for (const PartitionType& t : spec.hiding)
        for (int c : adapted_components_of_type(t)) out.insert(c);
    return out;
}

Rational DesignResult::min_margin() const {
    Rational best = -1;
    for (const auto& [type, m] : revealing_margins)
        if (best < 0 || m < best) best = m;
    return best;
}

namespace {

// Weight vectors (n0..n4)/q with nonnegative integer entries summing to q,
// lexicographic order.
std::vector<std::array<int, 5>> simplex_grid(int q) {
    std::vector<std::array<int, 5>> out;
    for (int a = 0; a <= q; ++a)
        for (int b = 0; a + b <= q; ++b)
            for (int c = 0; a + b + c <= q; ++c)
                for (int d = 0; a + b + c + d <= q; ++d)
                    out.push_back({a, b, c, d, q - a - b - c - d});
    return out;
}

ExpectationVector expectations_of_grid_point(const std::array<int, 5>& w, int q) {
    const VertexTable& vt = vertex_table();
    ExpectationVector r;
    for (int c = 0; c < 4; ++c) {
        Rational acc = 0;
        for (int i = 0; i < 5; ++i)
            if (w[i] != 0) acc += Rational(w[i], q) * vt.omega[i][c];
        r[c] = acc;
    }
    return r;
}

}  // namespace

DesignResult design_pair(const HidingSpec& spec) {
    const std::set<int> constraints = hiding_constraints(spec);
    const std::set<PartitionType> revealing = spec.revealing_types();

    for (int q : {4, 8, 16}) {
        const auto grid = simplex_grid(q);
        std::vector<ExpectationVector> rs(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            rs[i] = expectations_of_grid_point(grid[i], q);

        bool found = false;
        Rational best_margin = 0;
        std::size_t best_i = 0, best_j = 0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const ExpectationVector delta = rs[j] - rs[i];
                bool ok = true;
                for (int c : constraints)
                    if (delta[c] != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                // The one-block type is never hiding, so `revealing` is
                // nonempty and a positive minimum margin forces Delta != 0.
                Rational margin = -1;
                for (const PartitionType& t : revealing) {
                    Rational type_margin = 0;
                    for (int c : adapted_components_of_type(t)) {
                        Rational av = delta[c] < 0 ? -delta[c] : delta[c];
                        if (av > type_margin) type_margin = av;
                    }
                    if (margin < 0 || type_margin < margin) margin = type_margin;
                }
                if (margin <= 0) continue;
                if (!found || margin > best_margin) {
                    found = true;
                    best_margin = margin;
                    best_i = i;
                    best_j = j;
                }
            }
        if (!found) continue;

        DesignResult out;
        out.spec = spec;
        out.grid_denominator = q;
        std::array<Rational, kNumIrreps4> w0, w1;
        for (int k = 0; k < 5; ++k) {
            w0[k] = Rational(grid[best_i][k], q);
            w1[k] = Rational(grid[best_j][k], q);
        }
        out.pair.name = "designed-" + (spec.hiding.empty() ? std::string("none")
                                                           : spec.to_string());
        out.pair.rho0 = state_from_weights(w0);
        out.pair.rho1 = state_from_weights(w1);
        out.pair.valid0 = out.pair.rho0.valid();
        out.pair.valid1 = out.pair.rho1.valid();
        const ExpectationVector delta = out.pair.delta();
        for (int c : constraints) out.constraint_residuals[c] = delta[c];
        for (const PartitionType& t : revealing) {
            Rational m = 0;
            for (int c : adapted_components_of_type(t)) {
                Rational av = delta[c] < 0 ? -delta[c] : delta[c];
                if (av > m) m = av;
            }
            out.revealing_margins[partition_type_to_string(t)] = m;
        }
        return out;
    }
    throw invalid_input("design_pair: no feasible pair on the refinement grids for spec " +
                        spec.to_string());
}

VerifyReport verify_catalog(const StatePair& pair, const HidingSpec& spec,
                            const std::vector<int>& d_list) {
    VerifyReport rep;
    rep.pair_name = pair.name;
    rep.spec = spec;
    if (!pair.rho0.valid() || !pair.rho1.valid())
        throw invalid_input("verify_catalog: pair members must be valid states");

    const ExpectationVector delta = pair.delta();
    const std::set<int> constraints = hiding_constraints(spec);
    rep.constraints_hold = true;
    for (int c : constraints) {
        rep.constraint_values[c] = delta[c];
        if (delta[c] != 0) rep.constraints_hold = false;
    }
    for (int c = 0; c < 4; ++c)
        if (!constraints.count(c) && delta[c] == 0) rep.over_hiding_components.push_back(c);
    for (const PartitionType& t : spec.revealing_types()) {
        Rational m = 0;
        for (int c : adapted_components_of_type(t)) {
            Rational av = delta[c] < 0 ? -delta[c] : delta[c];
            if (av > m) m = av;
        }
        rep.revealing_margins[partition_type_to_string(t)] = m;
    }

    for (int d : d_list) rep.classifications.push_back(classify_pair(pair, d));

    // Bound trend per hiding-type partition; witness positivity and boost
    // sizes per revealing-type partition.
    if (!d_list.empty()) {
        for (const SitePartition& P : enumerate_partitions(4)) {
            const bool is_hiding_type = spec.hiding.count(P.type()) > 0;
            double prev = -1.0;
            for (const QualityReport& qr : rep.classifications) {
                const ReportRow& row = qr.row_for(P);
                if (is_hiding_type) {
                    if (prev >= 0.0 && row.hiding_bound > prev + 1e-10)
                        rep.hiding_bounds_decreasing = false;
                    prev = row.hiding_bound;
                }
            }
        }
        const QualityReport& last = rep.classifications.back();
        for (const PartitionType& t : spec.revealing_types()) {
            const ReportRow& row = last.row_for(representative_partition(t));
            if (row.witness_value <= 0.0) {
                rep.revealing_witnesses_positive = false;
                continue;
            }
            // Outcome probabilities of the witness on the two states; boosting
            // brings the discrimination error below eps2.
            AnalyzingOperator A = row.witness;
            double v = row.witness_value;
            double mid = 0.0;  // tr((rho0+rho1)/2 A)
            {
                const auto& classes = conjugacy_classes(4);
                for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
                    double class_sum = 0.0;
                    for (int idx : classes[c].member_index) class_sum += A.coeffs[idx];
                    Rational avg =
                        (pair.rho0.r.on_cycle_type(classes[c].cycle_type) +
                         pair.rho1.r.on_cycle_type(classes[c].cycle_type)) /
                        2;
                    mid += class_sum * to_double(avg);
                }
            }
            double p0 = mid - v / 2, p1 = mid + v / 2;
            p0 = std::clamp(p0, 0.0, 1.0);
            p1 = std::clamp(p1, 0.0, 1.0);
            rep.boost_copies[partition_type_to_string(t)] =
                required_copies(p0, p1, last.eps2);
        }
    }
    return rep;
}

}  // namespace hidelab
