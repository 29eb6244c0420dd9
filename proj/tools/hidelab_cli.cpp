#include <CLI11.hpp>

#include "hidelab/cli.hpp"
#include "hidelab/rational.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hidelab: multi-partite data-hiding state pairs, bounds and design"};
    app.require_subcommand(1);

    hidelab::RunConfig config;
    std::string d_text;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", config.out_path, "output file (default: stdout)");
        cmd->add_option("--format", config.format, "json|csv")->default_str("json");
        cmd->add_option("--seed", config.seed, "seed recorded in the report");
    };

    CLI::App* catalog = app.add_subcommand("catalog", "list the built-in state pairs");
    add_output(catalog);

    CLI::App* certify = app.add_subcommand("certify", "classify all 15 partitions for a pair");
    certify->add_option("--pair", config.pair_name, "pair name")->required();
    certify->add_option("--d", config.d, "site dimension")->required();
    certify->add_option("--eps1", config.eps1, "hiding threshold (default 5/d)");
    certify->add_option("--eps2", config.eps2, "revealing threshold (default 1e-6)");
    add_output(certify);

    CLI::App* scan = app.add_subcommand("scan", "hiding bound of one partition over a d range");
    scan->add_option("--pair", config.pair_name, "pair name")->required();
    scan->add_option("--d", d_text, "dimension range A..B")->required();
    scan->add_option("--partition", config.partition, "partition, e.g. \"12|34\"")->required();
    add_output(scan);

    CLI::App* tailor = app.add_subcommand("tailor", "design a pair for a hiding-type set");
    tailor->add_option("--hiding", config.hiding, "comma-separated types, e.g. \"1111,211,22\"")
        ->required();
    add_output(tailor);

    CLI::App* decay = app.add_subcommand("decay", "non-adapted witness coefficients over d");
    decay->add_option("--partition", config.partition, "partition, e.g. \"12|34\"")->required();
    decay->add_option("--d", d_text, "dimension range A..B (d >= 4)")->required();
    add_output(decay);

    CLI::App* bipartite = app.add_subcommand("bipartite", "two-party scheme qualities");
    bipartite->add_option("--d", config.d, "site dimension")->required();
    bipartite->add_option("--K", config.copies, "number of copies")->required();
    bipartite->add_flag("--dense", config.dense, "verify the closed forms densely");
    add_output(bipartite);

    CLI11_PARSE(app, argc, argv);

    config.command = app.get_subcommands().front()->get_name();
    try {
        if (config.command == "scan" || config.command == "decay")
            hidelab::parse_d_range(d_text, config.d_lo, config.d_hi);
    } catch (const hidelab::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return hidelab::run(config);
}
