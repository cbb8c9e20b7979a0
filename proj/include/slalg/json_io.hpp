#ifndef SLALG_JSON_IO_HPP
#define SLALG_JSON_IO_HPP

#include <json.hpp>

#include "slalg/approxid.hpp"
#include "slalg/arens.hpp"
#include "slalg/spectra.hpp"

namespace slalg::io {

using json = nlohmann::json;

json rat_json(const Rat& q);          // int when it fits, else "p/q" string
Rat rat_from(const json& j);
json point_json(const Point& p);
Point point_from(const json& j);
json value_json(const Value& v);

// full element schema: {"semigroup","mode","terms":[[point, coeff]...]}
json element_json(const Element& e);
Element element_from(const json& j);
// compact terms-only array, semigroup/mode supplied externally
json element_compact(const Element& e);
Element element_from_compact(const json& j, const Semigroup& sg, Mode mode = Mode::Exact);

json limit_report_json(const LimitReport& r);
json classification_json(const Classification& c);

json iter_config_json(const IterConfig& cfg);
IterConfig iter_config_from(const json& j);
json iter_result_json(const IterResult& r);

json sequence_json(const Sequence& s);
Sequence sequence_from(const json& j, const Semigroup& sg, const Weight* w = nullptr);

json setspec_json(const SetSpec& s);
SetSpec setspec_from(const json& j, const Semigroup& sg, const Weight* w = nullptr);

json functional_json(const Functional& f);
Functional functional_from(const json& j, const Semigroup& sg);

json membership_json(const MembershipResult& m);
json witness_report_json(const WitnessReport& r);
json compactness_json(const CompactnessReport& r);
json zero_cluster_json(const ZeroClusterResult& r);
json craw_young_json(const CrawYoungWitness& r);
json dtc_json(const DtcReport& r);
json ai_report_json(const AiReport& r);
json ai_rows_json(const std::vector<AiVerificationRow>& rows);
json density_json(const DensityApprox& d);
json characters_json(const std::vector<Semicharacter>& cs);
json gelfand_json(const std::vector<std::pair<Point, Rat>>& g);

} // namespace slalg::io

#endif
