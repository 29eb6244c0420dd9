#ifndef HIDELAB_CLI_HPP
#define HIDELAB_CLI_HPP

#include <string>

namespace hidelab {

struct RunConfig {
    std::string command;    // catalog | certify | scan | tailor | decay | bipartite
    std::string pair_name;
    std::string partition;  // "12|34" syntax, 1-based
    std::string hiding;     // "1111,211,22"
    int d = 0;
    int d_lo = 0, d_hi = 0;  // ranges for scan/decay
    double eps1 = -1.0, eps2 = -1.0;  // negative -> module defaults
    int copies = 0;
    bool dense = false;
    std::string out_path;       // empty -> stdout
    std::string format = "json";
    long seed = 0;  // recorded in reports for reproducibility
};

// Parses "A..B" or a single integer.
void parse_d_range(const std::string& text, int& lo, int& hi);

// Executes one command. Exit codes: 0 success, 2 invalid/infeasible inputs
// or guard violations, 1 internal error.
int run(const RunConfig& config);

}  // namespace hidelab

#endif
