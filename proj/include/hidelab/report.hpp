#ifndef HIDELAB_REPORT_HPP
#define HIDELAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hidelab/certify.hpp"
#include "hidelab/multicopy.hpp"
#include "hidelab/tailor.hpp"
#include "hidelab/werner.hpp"

namespace hidelab {

using Json = nlohmann::ordered_json;

// Doubles are rounded to 12 significant digits before serialization so that
// repeated runs emit byte-identical reports.
double round12(double x);

Json catalog_to_json(const std::vector<StatePair>& pairs);
std::vector<StatePair> catalog_from_json(const Json& j);
std::string catalog_to_csv(const std::vector<StatePair>& pairs);

Json quality_report_to_json(const QualityReport& report);
std::string quality_report_to_csv(const QualityReport& report);

Json decay_table_to_json(const DecayTable& table);
std::string decay_table_to_csv(const DecayTable& table);  // header d,max_nonadapted_coeff

Json design_result_to_json(const DesignResult& result);
Json verify_report_to_json(const VerifyReport& report);

struct ScanRow {
    int d = 0;
    bool valid = false;
    double hiding_bound = 0.0;
};

Json scan_to_json(const std::string& pair_name, const std::string& partition,
                  const std::vector<ScanRow>& rows);
std::string scan_to_csv(const std::vector<ScanRow>& rows);  // header d,hiding_bound

Json bipartite_to_json(int d, int K, const BipartiteQualities& q,
                       const BipartiteDenseCheck* dense,
                       const std::vector<SeparabilityEntry>* separability);
std::string bipartite_to_csv(int d, int K, const BipartiteQualities& q);

// Writes through a temp file in the target directory and renames into place.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace hidelab

#endif
