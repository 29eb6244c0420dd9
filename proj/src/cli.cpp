#include "hidelab/cli.hpp"

#include <iostream>

#include "hidelab/report.hpp"

namespace hidelab {

void parse_d_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw invalid_input("bad dimension range: \"" + text + "\" (expected INT or A..B)");
    }
    if (lo < 1 || hi < lo) throw invalid_input("bad dimension range: \"" + text + "\"");
}

namespace {

void emit(const RunConfig& config, const Json& json_doc, const std::string& csv_doc) {
    std::string content;
    if (config.format == "json")
        content = json_doc.dump(2) + "\n";
    else if (config.format == "csv")
        content = csv_doc;
    else
        throw invalid_input("unknown format: " + config.format + " (expected json|csv)");
    if (config.format == "csv" && csv_doc.empty())
        throw invalid_input("command \"" + config.command + "\" has no CSV form");
    if (config.out_path.empty())
        std::cout << content;
    else
        atomic_write(config.out_path, content);
}

Json with_meta(const RunConfig& config, Json j) {
    Json out;
    out["command"] = config.command;
    out["seed"] = config.seed;
    for (auto& [k, v] : j.items()) out[k] = std::move(v);
    return out;
}

int run_checked(const RunConfig& config) {
    if (config.command == "catalog") {
        const auto& pairs = catalog_pairs();
        emit(config, catalog_to_json(pairs), catalog_to_csv(pairs));
        return 0;
    }
    if (config.command == "certify") {
        const StatePair& pair = catalog_pair(config.pair_name);
        QualityReport report = classify_pair(pair, config.d, config.eps1, config.eps2);
        emit(config, with_meta(config, quality_report_to_json(report)),
             quality_report_to_csv(report));
        return 0;
    }
    if (config.command == "scan") {
        const StatePair& pair = catalog_pair(config.pair_name);
        const SitePartition P = SitePartition::parse(config.partition, 4);
        std::vector<ScanRow> rows;
        int valid_count = 0;
        for (int d = config.d_lo; d <= config.d_hi; ++d) {
            ScanRow row;
            row.d = d;
            row.valid = pair.rho0.valid_at(d) && pair.rho1.valid_at(d);
            if (row.valid) {
                row.hiding_bound = hiding_bound(pair, P, d);
                ++valid_count;
            } else {
                std::cerr << "scan: pair \"" << pair.name << "\" is not a state at d=" << d
                          << "; skipping\n";
            }
            rows.push_back(row);
        }
        if (valid_count == 0)
            throw invalid_input("scan: no dimension in the range admits the pair");
        emit(config, with_meta(config, scan_to_json(pair.name, P.to_string(), rows)),
             scan_to_csv(rows));
        return 0;
    }
    if (config.command == "tailor") {
        DesignResult result = design_pair(parse_hiding_spec(config.hiding));
        emit(config, with_meta(config, design_result_to_json(result)), "");
        return 0;
    }
    if (config.command == "decay") {
        if (config.d_lo < 4) throw invalid_input("decay: range must start at d >= 4");
        const SitePartition P = SitePartition::parse(config.partition, 4);
        std::vector<int> ds;
        for (int d = config.d_lo; d <= config.d_hi; ++d) ds.push_back(d);
        DecayTable table = coefficient_decay(P, ds);
        emit(config, with_meta(config, decay_table_to_json(table)), decay_table_to_csv(table));
        return 0;
    }
    if (config.command == "bipartite") {
        BipartiteQualities q = bipartite_qualities(config.d, config.copies);
        if (config.dense) {
            BipartiteDenseCheck dense = bipartite_dense_check(config.d, config.copies);
            auto sep = separability_certificate(config.d);
            emit(config, with_meta(config, bipartite_to_json(config.d, config.copies, q,
                                                             &dense, &sep)),
                 bipartite_to_csv(config.d, config.copies, q));
        } else {
            emit(config,
                 with_meta(config, bipartite_to_json(config.d, config.copies, q, nullptr,
                                                     nullptr)),
                 bipartite_to_csv(config.d, config.copies, q));
        }
        return 0;
    }
    throw invalid_input("unknown command: " + config.command);
}

}  // namespace

int run(const RunConfig& config) {
    try {
        return run_checked(config);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hidelab
