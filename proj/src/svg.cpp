#include "kss/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "kss/polytope.hpp"

namespace kss {

namespace {

constexpr double kWidth = 640, kHeight = 560, kMargin = 70;

double to_double(const Rat& r) {
  return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

double coord(const std::string& s) { return to_double(rat_from_string(s)); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Simplex coordinates -> screen. x right, y up.
std::pair<double, double> screen(double x, double y) {
  double span = kWidth - 2 * kMargin;
  return {kMargin + x * span, kHeight - kMargin - y * span};
}

std::string status_color(const std::string& status) {
  static const std::map<std::string, std::string> colors = {
      {"KSS", "#66bb6a"},        {"UNSTABLE", "#ef5350"},
      {"CY_LC", "#42a5f5"},      {"CY_NOT_LC", "#ffa726"},
      {"NOT_LOG_FANO", "#bdbdbd"}};
  auto it = colors.find(status);
  return it == colors.end() ? "#ce93d8" : it->second;
}

std::string combo_color(const std::vector<std::string>& statuses) {
  if (statuses.size() == 1) return status_color(statuses[0]);
  static const char* palette[] = {"#66bb6a", "#ef5350", "#42a5f5", "#ffa726",
                                  "#ab47bc", "#26a69a", "#d4e157", "#8d6e63"};
  std::size_t h = 0;
  for (const std::string& s : statuses) {
    for (char c : s) h = h * 131 + static_cast<unsigned char>(c);
  }
  return palette[h % 8];
}

struct SvgDoc {
  std::string body;

  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double width) {
    body += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
            "\" y2=\"" + fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
            fmt(width) + "\"/>\n";
  }
  void circle(double x, double y, double r, const std::string& fill) {
    body += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" + fmt(r) +
            "\" fill=\"" + fill + "\"/>\n";
  }
  void polygon(const std::vector<std::pair<double, double>>& pts,
               const std::string& fill, const std::string& stroke) {
    body += "<polygon points=\"";
    for (const auto& [x, y] : pts) body += fmt(x) + "," + fmt(y) + " ";
    body += "\" fill=\"" + fill + "\" fill-opacity=\"0.6\" stroke=\"" + stroke +
            "\" stroke-width=\"1\"/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 13) {
    body += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" +
            std::to_string(size) + "\" font-family=\"monospace\">" + s + "</text>\n";
  }
  std::string finish() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
           "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " +
           fmt(kHeight) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" +
           body + "</svg>\n";
  }
};

std::vector<std::pair<double, double>> ordered_polygon(const QMat& verts) {
  std::vector<std::pair<double, double>> pts;
  for (const QVec& v : verts) pts.emplace_back(to_double(v[0]), to_double(v[1]));
  double cx = 0, cy = 0;
  for (auto& [x, y] : pts) {
    cx += x;
    cy += y;
  }
  cx /= pts.size();
  cy /= pts.size();
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.second - cy, a.first - cx) <
           std::atan2(b.second - cy, b.first - cx);
  });
  std::vector<std::pair<double, double>> out;
  for (const auto& [x, y] : pts) out.push_back(screen(x, y));
  return out;
}

void draw_simplex_frame(SvgDoc& doc) {
  auto a = screen(0, 0), b = screen(1, 0), c = screen(0, 1);
  doc.line(a.first, a.second, b.first, b.second, "#333333", 1.5);
  doc.line(a.first, a.second, c.first, c.second, "#333333", 1.5);
  doc.line(b.first, b.second, c.first, c.second, "#333333", 1.5);
  doc.text(a.first - 18, a.second + 18, "(0,0)");
  doc.text(b.first - 10, b.second + 18, "(1,0)");
  doc.text(c.first - 40, c.second - 6, "(0,1)");
}

// Substitutes the fixed slice coordinates into a halfspace document and
// returns the induced 2-d halfspace, or nothing when it degenerates.
std::optional<Halfspace> slice_halfspace(const Json& hj, std::size_t k,
                                         const SvgSlice& slice,
                                         const std::vector<std::size_t>& free_coords) {
  QVec normal;
  for (const Json& e : hj["normal"]) normal.push_back(rat_from_string(e.get<std::string>()));
  Rat offset = rat_from_string(hj["offset"].get<std::string>());
  (void)k;
  for (const auto& [idx, val] : slice) offset -= normal[idx] * val;
  QVec reduced;
  for (std::size_t idx : free_coords) reduced.push_back(normal[idx]);
  if (is_zero(reduced)) return std::nullopt;
  return Halfspace::geq(std::move(reduced), std::move(offset));
}

std::vector<std::size_t> free_coordinates(std::size_t k, const SvgSlice& slice) {
  std::vector<std::size_t> free_coords;
  for (std::size_t j = 0; j < k; ++j) {
    bool fixed = std::any_of(slice.begin(), slice.end(),
                             [&](const auto& p) { return p.first == j; });
    if (!fixed) free_coords.push_back(j);
  }
  return free_coords;
}

QMat sliced_region(const Json& halfspaces, std::size_t k, const SvgSlice& slice) {
  std::vector<std::size_t> free_coords = free_coordinates(k, slice);
  std::vector<Halfspace> hs;
  for (const Json& hj : halfspaces) {
    auto h = slice_halfspace(hj, k, slice, free_coords);
    if (h) hs.push_back(*h);
  }
  Polytope p = from_halfspaces(free_coords.size(), std::move(hs));
  return p.vertices;
}

void render_1d_interval(SvgDoc& doc, double lo, double hi, double y,
                        const std::string& color, double width) {
  auto a = screen(lo, 0), b = screen(hi, 0);
  doc.line(a.first, y, b.first, y, color, width);
}

void draw_axis(SvgDoc& doc, double y) {
  auto a = screen(0, 0), b = screen(1, 0);
  doc.line(a.first, y, b.first, y, "#333333", 1.5);
  for (double t : {0.0, 1.0}) {
    auto p = screen(t, 0);
    doc.line(p.first, y - 6, p.first, y + 6, "#333333", 1.5);
    doc.text(p.first - 4, y + 22, t == 0 ? "0" : "1");
  }
}

}  // namespace

SvgSlice parse_slice(const std::string& spec) {
  SvgSlice slice;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t eq = spec.find('=', pos);
    if (eq == std::string::npos) throw input_error("slice: expected i=p/q pairs");
    std::size_t comma = spec.find(',', eq);
    std::string idx_str = spec.substr(pos, eq - pos);
    std::string val_str = spec.substr(
        eq + 1, comma == std::string::npos ? std::string::npos : comma - eq - 1);
    try {
      slice.emplace_back(std::stoul(idx_str) - 1, rat_from_string(val_str));
    } catch (const std::exception& e) {
      throw input_error(std::string("slice: ") + e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return slice;
}

std::string svg_domain(const Json& domain_doc, const SvgSlice& slice) {
  std::size_t k = domain_doc["ambient"].get<std::size_t>();
  SvgDoc doc;
  std::string name = domain_doc.value("name", std::string("domain"));

  if (k == 1) {
    double y = kHeight / 2;
    draw_axis(doc, y);
    if (!domain_doc["interval"].is_null()) {
      double lo = coord(domain_doc["interval"][0].get<std::string>());
      double hi = coord(domain_doc["interval"][1].get<std::string>());
      render_1d_interval(doc, lo, hi, y, status_color("KSS"), 8);
      for (double t : {lo, hi}) {
        auto p = screen(t, 0);
        doc.circle(p.first, y, 5, "#1b5e20");
      }
      doc.text(screen(lo, 0).first - 10, y - 14,
               domain_doc["interval"][0].get<std::string>());
      if (hi != lo) {
        doc.text(screen(hi, 0).first - 10, y - 14,
                 domain_doc["interval"][1].get<std::string>());
      }
    }
    doc.text(kMargin, 30, name + ": K-semistable interval");
    return doc.finish();
  }

  QMat verts;
  if (k == 2 && slice.empty()) {
    for (const Json& vj : domain_doc["vertices"]) {
      QVec v;
      for (const Json& e : vj) v.push_back(rat_from_string(e.get<std::string>()));
      verts.push_back(std::move(v));
    }
    draw_simplex_frame(doc);
  } else {
    if (slice.size() + 2 != k) {
      throw degenerate_error("drawing needs a slice fixing all but 2 coordinates");
    }
    verts = sliced_region(domain_doc["halfspaces"], k, slice);
    draw_simplex_frame(doc);
  }

  if (verts.size() >= 3) {
    doc.polygon(ordered_polygon(verts), status_color("KSS"), "#1b5e20");
  } else if (verts.size() == 2) {
    auto a = screen(to_double(verts[0][0]), to_double(verts[0][1]));
    auto b = screen(to_double(verts[1][0]), to_double(verts[1][1]));
    doc.line(a.first, a.second, b.first, b.second, status_color("KSS"), 5);
  }
  for (const QVec& v : verts) {
    auto p = screen(to_double(v[0]), to_double(v[1]));
    doc.circle(p.first, p.second, 4, "#1b5e20");
    doc.text(p.first + 6, p.second - 6,
             "(" + rat_to_string(v[0]) + "," + rat_to_string(v[1]) + ")", 11);
  }
  doc.text(kMargin, 30, name + ": K-semistable domain");
  return doc.finish();
}

std::string svg_chambers(const Json& chambers_doc, const SvgSlice& slice) {
  std::size_t k = chambers_doc["k"].get<std::size_t>();
  SvgDoc doc;

  auto statuses_of = [](const Json& chamber) {
    std::vector<std::string> ss;
    for (const auto& [model, status] : chamber["statuses"].items()) {
      ss.push_back(status.get<std::string>());
    }
    return ss;
  };

  if (k == 1) {
    double y = kHeight / 2;
    for (const Json& c : chambers_doc["chambers"]) {
      double lo = 1, hi = 0;
      for (const Json& vj : c["vertices"]) {
        double v = coord(vj[0].get<std::string>());
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      render_1d_interval(doc, lo, hi, y, combo_color(statuses_of(c)), 10);
    }
    draw_axis(doc, y);
    for (const Json& w : chambers_doc["walls"]) {
      double n = coord(w["normal"][0].get<std::string>());
      double b = coord(w["offset"].get<std::string>());
      auto p = screen(b / n, 0);
      doc.line(p.first, y - 10, p.first, y + 10, "#212121", 2);
    }
    doc.text(kMargin, 30, "chamber decomposition");
    return doc.finish();
  }

  if (k != 2 && slice.size() + 2 != k) {
    throw degenerate_error("drawing needs a slice fixing all but 2 coordinates");
  }

  for (const Json& c : chambers_doc["chambers"]) {
    QMat verts;
    for (const Json& vj : c["vertices"]) {
      QVec v;
      for (const Json& e : vj) v.push_back(rat_from_string(e.get<std::string>()));
      verts.push_back(std::move(v));
    }
    if (k != 2) continue;  // sliced chamber shading is omitted; walls suffice
    if (verts.size() >= 3) {
      doc.polygon(ordered_polygon(verts), combo_color(statuses_of(c)), "#424242");
    }
  }
  draw_simplex_frame(doc);

  // Walls clipped to the simplex.
  for (const Json& w : chambers_doc["walls"]) {
    QVec normal;
    for (const Json& e : w["normal"]) normal.push_back(rat_from_string(e.get<std::string>()));
    Rat offset = rat_from_string(w["offset"].get<std::string>());
    if (k != 2) {
      for (const auto& [idx, val] : slice) offset -= normal[idx] * val;
      QVec reduced;
      for (std::size_t idx : free_coordinates(k, slice)) reduced.push_back(normal[idx]);
      if (is_zero(reduced)) continue;
      normal = reduced;
    }
    Polytope cut = intersect(standard_simplex(2),
                             {Halfspace{Hyperplane::make(normal, offset), +1},
                              Halfspace{Hyperplane::make(normal, offset), -1}});
    if (cut.vertices.size() == 2) {
      auto a = screen(to_double(cut.vertices[0][0]), to_double(cut.vertices[0][1]));
      auto b = screen(to_double(cut.vertices[1][0]), to_double(cut.vertices[1][1]));
      doc.line(a.first, a.second, b.first, b.second, "#212121", 1.2);
    }
  }
  doc.text(kMargin, 30, "chamber decomposition");
  return doc.finish();
}

}  // namespace kss
