#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "kss/api.hpp"
#include "kss/svg.hpp"

namespace {

using kss::Json;

struct OutputOptions {
  std::string out_path;   // empty: stdout
  std::string svg_path;   // empty: no SVG
  std::string slice_spec; // "i=p/q,..." for k >= 3 drawings
};

void emit(const Json& doc, const OutputOptions& opts,
          const std::function<std::string(const Json&, const kss::SvgSlice&)>& renderer) {
  std::string payload = doc.dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw kss::input_error("cannot write '" + opts.out_path + "'");
    out << payload;
  }
  if (!opts.svg_path.empty()) {
    if (!renderer) throw kss::degenerate_error("this command has no SVG form");
    kss::SvgSlice slice;
    if (!opts.slice_spec.empty()) slice = kss::parse_slice(opts.slice_spec);
    std::ofstream out(opts.svg_path, std::ios::binary);
    if (!out) throw kss::input_error("cannot write '" + opts.svg_path + "'");
    out << renderer(doc, slice);
  }
}

void attach_output_flags(CLI::App* cmd, OutputOptions& opts, bool svg_capable) {
  cmd->add_option("--out", opts.out_path, "write JSON here instead of stdout");
  if (svg_capable) {
    cmd->add_option("--svg", opts.svg_path, "also render an SVG to this path");
    cmd->add_option("--slice", opts.slice_spec,
                    "for k >= 3: fix coordinates, e.g. \"3=0,4=1/4\"");
  }
}

int error_json(const std::string& code, const std::string& message, int exit_code) {
  Json err;
  err["error"] = code;
  err["message"] = message;
  std::cerr << err.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-semistable domains, invariants, and chamber decompositions "
               "for toric log Fano pairs and valuation tables"};
  app.require_subcommand(1);

  std::string model_path, family_path, model_name;
  std::string at_str, from_str, to_str;
  std::size_t ray_index = 0;
  unsigned dilation = 1, grid_n = 2, samples = 100;
  OutputOptions opts;

  Json doc;
  std::function<std::string(const Json&, const kss::SvgSlice&)> renderer;

  auto* validate = app.add_subcommand("validate", "check a model file");
  validate->add_option("model", model_path)->required();
  attach_output_flags(validate, opts, false);
  validate->callback([&] { doc = kss::api_validate(kss::load_model_file(model_path)); });

  auto* invariants = app.add_subcommand("invariants", "per-ray table of A, S, T, ord");
  invariants->add_option("model", model_path)->required();
  attach_output_flags(invariants, opts, false);
  invariants->callback(
      [&] { doc = kss::api_invariants(kss::load_model_file(model_path)); });

  auto* delta = app.add_subcommand("delta", "delta invariant at a coefficient vector");
  delta->add_option("model", model_path)->required();
  delta->add_option("--at", at_str, "coefficients p/q[,p/q...]");
  attach_output_flags(delta, opts, false);
  delta->callback([&] {
    kss::QVec x;
    if (!at_str.empty()) x = kss::parse_rat_vector(at_str);
    doc = kss::api_delta(kss::load_model_file(model_path), x);
  });

  auto* domain = app.add_subcommand("domain", "K-semistable domain polytope");
  domain->add_option("model", model_path)->required();
  attach_output_flags(domain, opts, true);
  domain->callback([&] {
    doc = kss::api_domain(kss::load_model_file(model_path));
    renderer = kss::svg_domain;
  });

  auto* lc = app.add_subcommand("lc", "log canonical polytope");
  lc->add_option("model", model_path)->required();
  attach_output_flags(lc, opts, false);
  lc->callback([&] { doc = kss::api_lc(kss::load_model_file(model_path)); });

  auto* mu = app.add_subcommand("mu", "minimal semistable coefficient mass and gap");
  mu->add_option("model", model_path)->required();
  attach_output_flags(mu, opts, false);
  mu->callback([&] { doc = kss::api_mu(kss::load_model_file(model_path)); });

  auto* sm = app.add_subcommand("sm", "basis-type approximation S_m of S");
  sm->add_option("model", model_path)->required();
  sm->add_option("--ray", ray_index, "ray index (0-based)")->required();
  sm->add_option("--m", dilation, "dilation m >= 1")->required();
  attach_output_flags(sm, opts, false);
  sm->callback(
      [&] { doc = kss::api_sm(kss::load_model_file(model_path), ray_index, dilation); });

  auto* chambers = app.add_subcommand("chambers", "chamber decomposition of a family");
  chambers->add_option("family", family_path)->required();
  attach_output_flags(chambers, opts, true);
  chambers->callback([&] {
    doc = kss::api_chambers(kss::load_family_file(family_path));
    renderer = kss::svg_chambers;
  });

  auto* crossing = app.add_subcommand("crossing", "wall crossings along a segment");
  crossing->add_option("family", family_path)->required();
  crossing->add_option("--model", model_name)->required();
  crossing->add_option("--from", from_str)->required();
  crossing->add_option("--to", to_str)->required();
  attach_output_flags(crossing, opts, false);
  crossing->callback([&] {
    doc = kss::api_crossing(kss::load_family_file(family_path), model_name,
                            kss::parse_rat_vector(from_str),
                            kss::parse_rat_vector(to_str));
  });

  auto* oracle = app.add_subcommand("oracle", "brute-force grid check of the domain");
  oracle->add_option("model", model_path)->required();
  oracle->add_option("--grid", grid_n, "grid resolution n >= 2")->required();
  attach_output_flags(oracle, opts, false);
  oracle->callback(
      [&] { doc = kss::api_oracle(kss::load_model_file(model_path), grid_n); });

  auto* consistency = app.add_subcommand(
      "consistency", "sampled agreement of classification and domain membership");
  consistency->add_option("model", model_path)->required();
  consistency->add_option("--samples", samples);
  attach_output_flags(consistency, opts, false);
  consistency->callback(
      [&] { doc = kss::api_consistency(kss::load_model_file(model_path), samples); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return error_json("MALFORMED_REQUEST", e.what(), 2);
  } catch (const kss::validation_error& e) {
    return error_json(e.code, e.what(), 3);
  } catch (const kss::input_error& e) {
    return error_json("MALFORMED_INPUT", e.what(), 2);
  } catch (const kss::degenerate_error& e) {
    return error_json("DEGENERATE_REQUEST", e.what(), 4);
  } catch (const kss::invariant_violation& e) {
    return error_json("INVARIANT_VIOLATION", e.what(), 1);
  } catch (const std::exception& e) {
    return error_json("INTERNAL_ERROR", e.what(), 1);
  }

  try {
    emit(doc, opts, renderer);
  } catch (const kss::input_error& e) {
    return error_json("MALFORMED_INPUT", e.what(), 2);
  } catch (const kss::degenerate_error& e) {
    return error_json("DEGENERATE_REQUEST", e.what(), 4);
  }
  return 0;
}
