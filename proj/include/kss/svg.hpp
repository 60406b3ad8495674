#ifndef KSS_SVG_HPP
#define KSS_SVG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kss/model_io.hpp"

namespace kss {

// Fixes coordinate index -> rational value; needed to draw k >= 3 results
// on a 2-dimensional affine slice.
using SvgSlice = std::vector<std::pair<std::size_t, Rat>>;

// Renders a `domain` result document. Pure presentation: everything drawn
// is read from the JSON, nothing is recomputed.
std::string svg_domain(const Json& domain_doc, const SvgSlice& slice = {});

// Renders a `chambers` document with per-status shading.
std::string svg_chambers(const Json& chambers_doc, const SvgSlice& slice = {});

SvgSlice parse_slice(const std::string& spec);  // "1=1/4,3=0"

}  // namespace kss

#endif
