#ifndef KSS_API_HPP
#define KSS_API_HPP

#include "kss/model_io.hpp"

namespace kss {

// Command-level entry points shared by the CLI and the python module.
// Each returns the canonical JSON document for the command.
Json api_validate(const Model& m);
Json api_invariants(const Model& m);
Json api_delta(const Model& m, const QVec& x);
Json api_domain(const Model& m);
Json api_lc(const Model& m);
Json api_mu(const Model& m);
Json api_sm(const Model& m, std::size_t ray_index, unsigned dilation);
Json api_chambers(const std::vector<Model>& family);
Json api_crossing(const std::vector<Model>& family, const std::string& model,
                  const QVec& from, const QVec& to);
Json api_oracle(const Model& m, unsigned n);
Json api_consistency(const Model& m, unsigned samples);
Json api_face_constancy(const std::vector<Model>& family, unsigned samples_per_face);

}  // namespace kss

#endif
