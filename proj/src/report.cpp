#include "hidelab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hidelab {

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json expectations_to_json(const ExpectationVector& r) {
    Json arr = Json::array();
    for (int i = 0; i < 4; ++i) arr.push_back(rational_to_string(r[i]));
    return arr;
}

ExpectationVector expectations_from_json(const Json& arr) {
    ExpectationVector r;
    for (int i = 0; i < 4; ++i) r[i] = rational_from_string(arr.at(i).get<std::string>());
    return r;
}

Json witness_to_json(const AnalyzingOperator& A) {
    Json arr = Json::array();
    const auto& perms = all_permutations(4);
    for (int i = 0; i < 24; ++i) {
        if (A.coeffs[i] == 0.0) continue;
        arr.push_back(Json{{"perm", perms[i].to_cycle_string()}, {"a", round12(A.coeffs[i])}});
    }
    return arr;
}

}  // namespace

Json catalog_to_json(const std::vector<StatePair>& pairs) {
    Json list = Json::array();
    for (const StatePair& p : pairs) {
        Json item;
        item["name"] = p.name;
        item["rho0"] = expectations_to_json(p.rho0.r);
        item["rho1"] = expectations_to_json(p.rho1.r);
        item["valid0"] = p.valid0;
        item["valid1"] = p.valid1;
        list.push_back(std::move(item));
    }
    return list;
}

std::vector<StatePair> catalog_from_json(const Json& j) {
    std::vector<StatePair> out;
    for (const Json& item : j) {
        StatePair p;
        p.name = item.at("name").get<std::string>();
        p.rho0 = state_from_expectations(expectations_from_json(item.at("rho0")));
        p.rho1 = state_from_expectations(expectations_from_json(item.at("rho1")));
        p.valid0 = item.at("valid0").get<bool>();
        p.valid1 = item.at("valid1").get<bool>();
        out.push_back(std::move(p));
    }
    return out;
}

std::string catalog_to_csv(const std::vector<StatePair>& pairs) {
    std::string out = "name,r2_0,r22_0,r3_0,r4_0,r2_1,r22_1,r3_1,r4_1,valid0,valid1\n";
    for (const StatePair& p : pairs) {
        out += p.name;
        for (int i = 0; i < 4; ++i) out += "," + rational_to_string(p.rho0.r[i]);
        for (int i = 0; i < 4; ++i) out += "," + rational_to_string(p.rho1.r[i]);
        out += p.valid0 ? ",true" : ",false";
        out += p.valid1 ? ",true\n" : ",false\n";
    }
    return out;
}

Json quality_report_to_json(const QualityReport& report) {
    Json j;
    j["pair"] = report.pair_name;
    j["d"] = report.d;
    j["eps1"] = round12(report.eps1);
    j["eps2"] = round12(report.eps2);
    Json rows = Json::array();
    for (const ReportRow& row : report.rows) {
        Json r;
        r["partition"] = row.partition.to_string();
        r["hiding_bound"] = round12(row.hiding_bound);
        r["witness_value"] = round12(row.witness_value);
        r["verdict"] = verdict_to_string(row.verdict);
        r["witness_coefficients"] = witness_to_json(row.witness);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["notes"] = report.notes;
    return j;
}

std::string quality_report_to_csv(const QualityReport& report) {
    std::string out = "partition,hiding_bound,witness_value,verdict\n";
    for (const ReportRow& row : report.rows) {
        out += row.partition.to_string() + "," + format12(row.hiding_bound) + "," +
               format12(row.witness_value) + "," + verdict_to_string(row.verdict) + "\n";
    }
    return out;
}

Json decay_table_to_json(const DecayTable& table) {
    Json j;
    j["pair"] = table.pair_name;
    j["partition"] = table.partition.to_string();
    Json rows = Json::array();
    for (const DecayRow& r : table.rows)
        rows.push_back(Json{{"d", r.d},
                            {"max_nonadapted_coeff", round12(r.max_nonadapted)},
                            {"witness_value", round12(r.witness_value)},
                            {"feasibility_violation", round12(r.feasibility_violation)}});
    j["rows"] = std::move(rows);
    return j;
}

std::string decay_table_to_csv(const DecayTable& table) {
    std::string out = "d,max_nonadapted_coeff\n";
    for (const DecayRow& r : table.rows)
        out += std::to_string(r.d) + "," + format12(r.max_nonadapted) + "\n";
    return out;
}

Json design_result_to_json(const DesignResult& result) {
    Json j;
    j["name"] = result.pair.name;
    j["rho0"] = expectations_to_json(result.pair.rho0.r);
    j["rho1"] = expectations_to_json(result.pair.rho1.r);
    j["valid0"] = result.pair.valid0;
    j["valid1"] = result.pair.valid1;
    j["provenance"] = result.provenance;
    j["hiding"] = result.spec.to_string();
    j["grid_denominator"] = result.grid_denominator;
    Json residuals = Json::object();
    static const char* kComponentNames[4] = {"r2", "r22", "r3", "r4"};
    for (const auto& [c, v] : result.constraint_residuals)
        residuals[kComponentNames[c]] = rational_to_string(v);
    j["constraint_residuals"] = std::move(residuals);
    Json margins = Json::object();
    for (const auto& [type, m] : result.revealing_margins)
        margins[type] = rational_to_string(m);
    j["revealing_margins"] = std::move(margins);
    return j;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json j;
    j["pair"] = report.pair_name;
    j["hiding"] = report.spec.to_string();
    j["constraints_hold"] = report.constraints_hold;
    static const char* kComponentNames[4] = {"r2", "r22", "r3", "r4"};
    Json values = Json::object();
    for (const auto& [c, v] : report.constraint_values)
        values[kComponentNames[c]] = rational_to_string(v);
    j["constraint_values"] = std::move(values);
    Json over = Json::array();
    for (int c : report.over_hiding_components) over.push_back(kComponentNames[c]);
    j["over_hiding"] = std::move(over);
    Json margins = Json::object();
    for (const auto& [type, m] : report.revealing_margins)
        margins[type] = rational_to_string(m);
    j["revealing_margins"] = std::move(margins);
    j["hiding_bounds_decreasing"] = report.hiding_bounds_decreasing;
    j["revealing_witnesses_positive"] = report.revealing_witnesses_positive;
    Json boosts = Json::object();
    for (const auto& [type, k] : report.boost_copies) boosts[type] = k;
    j["boost_copies"] = std::move(boosts);
    Json cls = Json::array();
    for (const QualityReport& qr : report.classifications)
        cls.push_back(quality_report_to_json(qr));
    j["classifications"] = std::move(cls);
    return j;
}

Json scan_to_json(const std::string& pair_name, const std::string& partition,
                  const std::vector<ScanRow>& rows) {
    Json j;
    j["pair"] = pair_name;
    j["partition"] = partition;
    Json arr = Json::array();
    for (const ScanRow& r : rows) {
        Json item;
        item["d"] = r.d;
        if (r.valid)
            item["hiding_bound"] = round12(r.hiding_bound);
        else
            item["invalid"] = true;
        arr.push_back(std::move(item));
    }
    j["rows"] = std::move(arr);
    return j;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "d,hiding_bound\n";
    for (const ScanRow& r : rows) {
        if (!r.valid) continue;
        out += std::to_string(r.d) + "," + format12(r.hiding_bound) + "\n";
    }
    return out;
}

Json bipartite_to_json(int d, int K, const BipartiteQualities& q,
                       const BipartiteDenseCheck* dense,
                       const std::vector<SeparabilityEntry>* separability) {
    Json j;
    j["d"] = d;
    j["K"] = K;
    j["eps1"] = round12(q.eps1);
    j["eps2"] = round12(q.eps2);
    if (dense) {
        Json dj;
        dj["eps1_dense"] = round12(dense->eps1_dense);
        dj["trace_norm"] = round12(dense->trace_norm_dense);
        dj["tr_rho1_A"] = round12(dense->tr_rho1_A);
        dj["tr_rho0_A"] = round12(dense->tr_rho0_A);
        dj["eps2_dense"] = round12(dense->eps2_dense);
        j["dense"] = std::move(dj);
    }
    if (separability) {
        Json arr = Json::array();
        for (const SeparabilityEntry& e : *separability)
            arr.push_back(Json{{"state", e.state},
                               {"flip_expectation", round12(e.flip_expectation)},
                               {"ppt_min_eigenvalue", round12(e.ppt_min_eigenvalue)},
                               {"separable", e.separable}});
        j["separability"] = std::move(arr);
    }
    return j;
}

std::string bipartite_to_csv(int d, int K, const BipartiteQualities& q) {
    return "d,K,eps1,eps2\n" + std::to_string(d) + "," + std::to_string(K) + "," +
           format12(q.eps1) + "," + format12(q.eps2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace hidelab
