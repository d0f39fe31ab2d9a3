#ifndef SPARSEZEROS_REPORT_HPP
#define SPARSEZEROS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "sparsezeros/census.hpp"
#include "sparsezeros/extremal.hpp"
#include "sparsezeros/newton.hpp"
#include "sparsezeros/roots.hpp"
#include "sparsezeros/trees.hpp"

namespace sparsezeros {

using json = nlohmann::json;

json series_to_json(const LaurentSeries& x);
LaurentSeries series_from_json(const json& j, const FieldPtr& base_residue);

json poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(const json& j);

json polygon_to_json(const NewtonPolygon& np);

json root_record_to_json(const RootRecord& r);
/// Full root report with the q^k / Moebius summary block.
json root_report(const SparsePoly& f, const std::vector<RootRecord>& recs, std::int64_t prec,
                 std::int64_t d = 0);

json oracle_report(const SparsePoly& f, const std::vector<LaurentSeries>& found, std::int64_t prec,
                   std::int64_t w_lo, std::int64_t w_hi);

json bound_table_to_json(const BoundTable& bt);

json extremal_report_to_json(const ExtremalReport& r);

json instance_report_to_json(const InstanceReport& r);
json campaign_report_to_json(const VerifyReport& r);
std::string campaign_report_csv(const VerifyReport& r);

json tree_report(const SparsePoly& f, const std::vector<RootRecord>& recs);

CorpusSpec corpus_spec_from_json(const json& j);
json corpus_spec_to_json(const CorpusSpec& spec);

} // namespace sparsezeros

#endif
