#include "kss/api.hpp"

#include <algorithm>
#include <set>

namespace kss {

namespace {

void require_unique_names(const std::vector<Model>& family) {
  std::set<std::string> seen;
  for (const Model& m : family) {
    if (!seen.insert(model_name(m)).second) {
      throw input_error("family has two models named '" + model_name(m) + "'");
    }
  }
}

}  // namespace

Json api_validate(const Model& m) { return validate_json(m); }

Json api_invariants(const Model& m) { return invariants_json(m); }

Json api_delta(const Model& m, const QVec& x) {
  return delta_json(delta_at(problem_of(m), x));
}

Json api_domain(const Model& m) {
  Json j = domain_json(kss_domain(problem_of(m)));
  j["name"] = model_name(m);
  return j;
}

Json api_lc(const Model& m) {
  Json j = polytope_json(lc_polytope(problem_of(m)));
  j["name"] = model_name(m);
  return j;
}

Json api_mu(const Model& m) { return mu_json(kss_domain(problem_of(m))); }

Json api_sm(const Model& m, std::size_t ray_index, unsigned dilation) {
  const auto* pm = std::get_if<PairModel>(&m);
  if (!pm) throw degenerate_error("basis-type approximation needs a toric model");
  return sm_json(*pm, ray_index, dilation);
}

Json api_chambers(const std::vector<Model>& family) {
  require_unique_names(family);
  return chambers_json(chamber_complex(family));
}

Json api_crossing(const std::vector<Model>& family, const std::string& model,
                  const QVec& from, const QVec& to) {
  require_unique_names(family);
  auto it = std::find_if(family.begin(), family.end(), [&](const Model& m) {
    return model_name(m) == model;
  });
  if (it == family.end()) {
    throw input_error("family has no model named '" + model + "'");
  }
  ChamberComplex cc = chamber_complex(family);
  return crossing_json(model, crossing_report(cc, *it, from, to));
}

Json api_oracle(const Model& m, unsigned n) { return oracle_json(grid_oracle(m, n)); }

Json api_consistency(const Model& m, unsigned samples) {
  return consistency_json(consistency_check(m, samples));
}

Json api_face_constancy(const std::vector<Model>& family, unsigned samples_per_face) {
  require_unique_names(family);
  ChamberComplex cc = chamber_complex(family);
  return face_constancy_json(face_constancy_check(cc, family, samples_per_face));
}

}  // namespace kss
