#include "kss/model_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace kss {

namespace {

void check_keys(const Json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!j.is_object()) throw input_error(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw input_error(where + ": unknown key '" + key + "'");
    }
  }
}

Rat parse_rat(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw input_error(where + ": " + e.what());
  }
  throw input_error(where + ": expected a rational string");
}

QVec parse_rat_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array");
  QVec v;
  for (const Json& x : j) v.push_back(parse_rat(x, where));
  return v;
}

Halfspace parse_halfspace(const Json& j, const std::string& where) {
  check_keys(j, {"normal", "offset"}, where);
  if (!j.contains("normal") || !j.contains("offset")) {
    throw input_error(where + ": halfspace needs 'normal' and 'offset'");
  }
  QVec normal = parse_rat_array(j["normal"], where + ".normal");
  Rat offset = parse_rat(j["offset"], where + ".offset");
  try {
    return Halfspace::geq(std::move(normal), std::move(offset));
  } catch (const degenerate_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

Model parse_toric(const Json& j, const std::string& default_name) {
  check_keys(j, {"kind", "name", "dim", "rays", "divisors"}, "toric model");
  for (const char* key : {"dim", "rays", "divisors"}) {
    if (!j.contains(key)) {
      throw input_error(std::string("toric model: missing key '") + key + "'");
    }
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw input_error("toric model: 'dim' must be a positive integer");
  }
  std::size_t d = j["dim"].get<std::size_t>();
  if (!j["rays"].is_array()) throw input_error("toric model: 'rays' must be an array");
  QMat rays;
  for (const Json& rj : j["rays"]) {
    if (!rj.is_array() || rj.size() != d) {
      throw input_error("toric model: each ray needs exactly 'dim' integer entries");
    }
    QVec r;
    for (const Json& e : rj) {
      if (!e.is_number_integer()) {
        throw input_error("toric model: ray entries must be integers");
      }
      r.push_back(Rat(Int(e.get<long long>())));
    }
    rays.push_back(std::move(r));
  }
  std::vector<ToricDivisorInput> divisors;
  if (!j["divisors"].is_array()) {
    throw input_error("toric model: 'divisors' must be an array");
  }
  for (const Json& dj : j["divisors"]) {
    check_keys(dj, {"name", "coeffs"}, "divisor");
    if (!dj.contains("name") || !dj.contains("coeffs")) {
      throw input_error("divisor needs 'name' and 'coeffs'");
    }
    divisors.push_back(ToricDivisorInput{
        dj["name"].get<std::string>(),
        parse_rat_array(dj["coeffs"], "divisor '" + dj["name"].get<std::string>() + "'")});
  }
  std::string name = j.value("name", default_name);
  return validate_model(std::move(name), rays, divisors);
}

Model parse_table(const Json& j, const std::string& default_name) {
  check_keys(j, {"kind", "name", "k", "rows", "lc_halfspaces", "certified"},
             "valuation table");
  for (const char* key : {"k", "rows"}) {
    if (!j.contains(key)) {
      throw input_error(std::string("valuation table: missing key '") + key + "'");
    }
  }
  ValuationTable t;
  t.name = j.value("name", default_name);
  if (!j["k"].is_number_integer() || j["k"].get<long long>() < 0) {
    throw input_error("valuation table: 'k' must be a nonnegative integer");
  }
  t.k = j["k"].get<std::size_t>();
  for (const Json& rj : j["rows"]) {
    check_keys(rj, {"label", "A", "S", "ord"}, "table row");
    for (const char* key : {"label", "A", "S", "ord"}) {
      if (!rj.contains(key)) {
        throw input_error(std::string("table row: missing key '") + key + "'");
      }
    }
    ValuationRow row;
    row.label = rj["label"].get<std::string>();
    row.A = parse_rat(rj["A"], "row A");
    row.S = parse_rat(rj["S"], "row S");
    row.ord = parse_rat_array(rj["ord"], "row ord");
    t.rows.push_back(std::move(row));
  }
  if (j.contains("lc_halfspaces")) {
    for (const Json& hj : j["lc_halfspaces"]) {
      t.lc_halfspaces.push_back(parse_halfspace(hj, "lc_halfspaces"));
    }
  }
  t.certified = j.value("certified", false);
  return validate_table(std::move(t));
}

}  // namespace

Model parse_model(const Json& j, const std::string& default_name) {
  if (!j.is_object() || !j.contains("kind")) {
    throw input_error("model: missing 'kind' (\"toric\" or \"table\")");
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "toric") return parse_toric(j, default_name);
  if (kind == "table") return parse_table(j, default_name);
  throw input_error("model: unknown kind '" + kind + "'");
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("bad JSON in '" + path + "': " + e.what());
  }
  return parse_model(j, std::filesystem::path(path).stem().string());
}

std::vector<Model> load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("bad JSON in '" + path + "': " + e.what());
  }
  check_keys(j, {"models"}, "family");
  if (!j.contains("models") || !j["models"].is_array()) {
    throw input_error("family: needs a 'models' array");
  }
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<Model> family;
  std::size_t i = 0;
  for (const Json& entry : j["models"]) {
    if (entry.is_string()) {
      std::filesystem::path mp(entry.get<std::string>());
      if (mp.is_relative()) mp = base / mp;
      family.push_back(load_model_file(mp.string()));
    } else {
      family.push_back(parse_model(entry, "model" + std::to_string(i)));
    }
    ++i;
  }
  if (family.empty()) throw input_error("family: no models given");
  return family;
}

QVec parse_rat_vector(const std::string& comma_separated) {
  QVec v;
  std::size_t pos = 0;
  while (pos <= comma_separated.size()) {
    std::size_t next = comma_separated.find(',', pos);
    std::string tok = comma_separated.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      v.push_back(rat_from_string(tok));
    } catch (const std::invalid_argument& e) {
      throw input_error(e.what());
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return v;
}

Json rat_list_json(const QVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

Json hyperplane_json(const Hyperplane& h) {
  Json j;
  j["normal"] = rat_list_json(h.normal);
  j["offset"] = rat_to_string(h.offset);
  return j;
}

Json halfspace_json(const Halfspace& h) {
  auto [normal, offset] = h.oriented();
  Json j;
  j["normal"] = rat_list_json(normal);
  j["offset"] = rat_to_string(offset);
  return j;
}

Json polytope_json(const Polytope& p) {
  Json j;
  j["ambient"] = p.ambient;
  Json hs = Json::array();
  for (const Halfspace& h : p.halfspaces) hs.push_back(halfspace_json(h));
  j["halfspaces"] = std::move(hs);
  Json vs = Json::array();
  for (const QVec& v : p.vertices) vs.push_back(rat_list_json(v));
  j["vertices"] = std::move(vs);
  j["dim"] = p.dim;
  return j;
}

Json model_json(const Model& m) {
  Json j;
  if (const auto* pm = std::get_if<PairModel>(&m)) {
    j["kind"] = "toric";
    j["name"] = pm->name;
    j["dim"] = pm->base.d;
    Json rays = Json::array();
    for (const QVec& r : pm->base.rays) {
      Json rj = Json::array();
      for (const Rat& x : r) rj.push_back(static_cast<long long>(numerator(x)));
      rays.push_back(std::move(rj));
    }
    j["rays"] = std::move(rays);
    Json divisors = Json::array();
    for (const ToricDivisor& d : pm->divisors) {
      Json dj;
      dj["name"] = d.name;
      dj["coeffs"] = rat_list_json(d.coeffs);
      divisors.push_back(std::move(dj));
    }
    j["divisors"] = std::move(divisors);
  } else {
    const auto& t = std::get<ValuationTable>(m);
    j["kind"] = "table";
    j["name"] = t.name;
    j["k"] = t.k;
    Json rows = Json::array();
    for (const ValuationRow& r : t.rows) {
      Json rj;
      rj["label"] = r.label;
      rj["A"] = rat_to_string(r.A);
      rj["S"] = rat_to_string(r.S);
      rj["ord"] = rat_list_json(r.ord);
      rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    Json hs = Json::array();
    for (const Halfspace& h : t.lc_halfspaces) hs.push_back(halfspace_json(h));
    j["lc_halfspaces"] = std::move(hs);
    j["certified"] = t.certified;
  }
  return j;
}

Json validate_json(const Model& m) {
  Json j;
  j["valid"] = true;
  j["name"] = model_name(m);
  j["k"] = model_k(m);
  j["model"] = model_json(m);
  if (const auto* pm = std::get_if<PairModel>(&m)) {
    Json derived;
    derived["degree"] = rat_to_string(pm->base.degree);
    derived["anticanonical_polytope"] = polytope_json(pm->base.anticanonical);
    Json ws = Json::array();
    for (const ToricDivisor& d : pm->divisors) {
      Json wj;
      wj["name"] = d.name;
      wj["witness"] = rat_list_json(d.witness);
      wj["index"] = d.index.str();
      ws.push_back(std::move(wj));
    }
    derived["divisors"] = std::move(ws);
    j["derived"] = std::move(derived);
  }
  return j;
}

Json invariants_json(const Model& m) {
  Json j;
  j["name"] = model_name(m);
  if (const auto* pm = std::get_if<PairModel>(&m)) {
    j["kind"] = "toric";
    j["degree"] = rat_to_string(pm->base.degree);
    Json names = Json::array();
    for (const ToricDivisor& d : pm->divisors) names.push_back(d.name);
    j["divisors"] = std::move(names);
    Json rays = Json::array();
    for (const QVec& r : pm->base.rays) {
      Json rj;
      rj["label"] = ray_label(r);
      rj["A"] = rat_to_string(log_discrepancy(pm->base, r));
      rj["S"] = rat_to_string(s_invariant(pm->base, r));
      rj["T"] = rat_to_string(t_invariant(pm->base, r));
      QVec ords;
      for (const ToricDivisor& d : pm->divisors) {
        ords.push_back(div_order(pm->base, d, r));
      }
      rj["ord"] = rat_list_json(ords);
      rays.push_back(std::move(rj));
    }
    j["rays"] = std::move(rays);
  } else {
    const auto& t = std::get<ValuationTable>(m);
    j["kind"] = "table";
    Json rows = Json::array();
    for (const ValuationRow& r : t.rows) {
      Json rj;
      rj["label"] = r.label;
      rj["A"] = rat_to_string(r.A);
      rj["S"] = rat_to_string(r.S);
      rj["ord"] = rat_list_json(r.ord);
      rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

Json delta_json(const DeltaReport& r) {
  Json j;
  j["x"] = rat_list_json(r.x);
  j["status"] = to_string(r.status);
  j["delta"] = r.delta ? Json(rat_to_string(*r.delta)) : Json(nullptr);
  j["delta_tilde"] = r.delta_tilde ? Json(rat_to_string(*r.delta_tilde)) : Json(nullptr);
  j["minimizer"] = r.minimizer ? Json(*r.minimizer) : Json(nullptr);
  return j;
}

Json domain_json(const KssDomainResult& r) {
  Json j = polytope_json(r.domain);
  j["in_E"] = r.in_E;
  j["mu"] = r.mu ? Json(rat_to_string(*r.mu)) : Json(nullptr);
  j["gap"] = r.gap ? Json(rat_to_string(*r.gap)) : Json(nullptr);
  if (r.interval) {
    j["interval"] = Json::array(
        {rat_to_string(r.interval->first), rat_to_string(r.interval->second)});
  } else {
    j["interval"] = nullptr;
  }
  j["certified"] = r.certified;
  j["klt_interior_empty"] = r.klt_interior_empty;
  Json fp = Json::array();
  for (const FacetProvenance& f : r.facet_provenance) {
    Json fj;
    fj["facet"] = hyperplane_json(f.facet);
    fj["labels"] = f.labels;
    fp.push_back(std::move(fj));
  }
  j["facet_provenance"] = std::move(fp);
  return j;
}

Json mu_json(const KssDomainResult& r) {
  Json j;
  j["mu"] = r.mu ? Json(rat_to_string(*r.mu)) : Json(nullptr);
  j["gap"] = r.gap ? Json(rat_to_string(*r.gap)) : Json(nullptr);
  j["in_E"] = r.in_E;
  return j;
}

Json sm_json(const PairModel& pm, std::size_t ray_index, unsigned dilation) {
  if (ray_index >= pm.base.rays.size()) {
    throw degenerate_error("ray index out of range");
  }
  const QVec& ray = pm.base.rays[ray_index];
  Json j;
  j["ray"] = rat_list_json(ray);
  j["m"] = dilation;
  j["lattice_points"] = dilated_lattice_points(pm.base, dilation).size();
  j["s_m"] = rat_to_string(s_m_invariant(pm.base, ray, dilation));
  j["s"] = rat_to_string(s_invariant(pm.base, ray));
  return j;
}

Json chambers_json(const ChamberComplex& cc) {
  Json j;
  j["k"] = cc.walls.k;
  Json walls = Json::array();
  for (const Hyperplane& w : cc.walls.hyperplanes) walls.push_back(hyperplane_json(w));
  j["walls"] = std::move(walls);
  Json chambers = Json::array();
  for (const Chamber& c : cc.chambers) {
    Json cj;
    cj["sign_vector"] = c.sign_vector;
    Json vs = Json::array();
    for (const QVec& v : c.closure.vertices) vs.push_back(rat_list_json(v));
    cj["vertices"] = std::move(vs);
    cj["sample"] = rat_list_json(c.sample);
    cj["volume"] = rat_to_string(volume(c.closure));
    Json st;
    for (const auto& [name, status] : c.statuses) st[name] = to_string(status);
    cj["statuses"] = std::move(st);
    chambers.push_back(std::move(cj));
  }
  j["chambers"] = std::move(chambers);
  Json edges = Json::array();
  for (const WallGraphEdge& e : cc.edges) {
    Json ej;
    ej["a"] = e.a;
    ej["b"] = e.b;
    ej["wall"] = hyperplane_json(e.wall);
    ej["changed_models"] = e.changed_models;
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

Json crossing_json(const std::string& model_name, const CrossingReport& r) {
  Json j;
  j["model"] = model_name;
  j["from"] = rat_list_json(r.from);
  j["to"] = rat_list_json(r.to);
  Json cs = Json::array();
  for (const CrossingEvent& e : r.crossings) {
    Json ej;
    ej["t"] = rat_to_string(e.t);
    ej["point"] = rat_list_json(e.point);
    Json ws = Json::array();
    for (const Hyperplane& w : e.walls) ws.push_back(hyperplane_json(w));
    ej["walls"] = std::move(ws);
    ej["status"] = to_string(e.status);
    cs.push_back(std::move(ej));
  }
  j["crossings"] = std::move(cs);
  Json segs = Json::array();
  for (const CrossingSegment& s : r.segments) {
    Json sj;
    sj["t_begin"] = rat_to_string(s.t_begin);
    sj["t_end"] = rat_to_string(s.t_end);
    sj["sample"] = rat_list_json(s.sample);
    sj["status"] = to_string(s.status);
    segs.push_back(std::move(sj));
  }
  j["segments"] = std::move(segs);
  return j;
}

Json oracle_json(const OracleReport& r) {
  Json j;
  j["n"] = r.n;
  j["points"] = r.points;
  Json counts;
  for (const auto& [status, count] : r.counts) counts[to_string(status)] = count;
  j["counts"] = std::move(counts);
  Json ms = Json::array();
  for (const QVec& x : r.mismatches) ms.push_back(rat_list_json(x));
  j["mismatches"] = std::move(ms);
  return j;
}

Json consistency_json(const ConsistencyReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["inside_checked"] = r.inside_checked;
  j["outside_checked"] = r.outside_checked;
  j["scaling_checked"] = r.scaling_checked;
  j["violations"] = Json::array();
  return j;
}

Json face_constancy_json(const FaceConstancyReport& r) {
  Json j;
  j["chambers"] = r.chambers;
  j["faces"] = r.faces;
  j["evaluations"] = r.evaluations;
  j["violations"] = Json::array();
  return j;
}

}  // namespace kss
