#ifndef KSS_MODEL_IO_HPP
#define KSS_MODEL_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "kss/chambers.hpp"
#include "kss/domains.hpp"
#include "kss/oracle.hpp"

namespace kss {

using Json = nlohmann::ordered_json;

// --- parsing (strict: unknown keys are rejected, rationals are strings) ---

Model parse_model(const Json& j, const std::string& default_name);
Model load_model_file(const std::string& path);

// Family file { "models": [ path-or-inline, ... ] }; paths resolve
// relative to the family file.
std::vector<Model> load_family_file(const std::string& path);

QVec parse_rat_vector(const std::string& comma_separated);

// --- serialization (canonical order; all numbers exact strings) ---

Json rat_list_json(const QVec& v);
Json hyperplane_json(const Hyperplane& h);
Json halfspace_json(const Halfspace& h);  // oriented: region <normal,x> >= offset
Json polytope_json(const Polytope& p);
Json model_json(const Model& m);
Json validate_json(const Model& m);
Json invariants_json(const Model& m);
Json delta_json(const DeltaReport& r);
Json domain_json(const KssDomainResult& r);
Json mu_json(const KssDomainResult& r);
Json sm_json(const PairModel& pm, std::size_t ray_index, unsigned dilation);
Json chambers_json(const ChamberComplex& cc);
Json crossing_json(const std::string& model_name, const CrossingReport& r);
Json oracle_json(const OracleReport& r);
Json consistency_json(const ConsistencyReport& r);
Json face_constancy_json(const FaceConstancyReport& r);

}  // namespace kss

#endif
