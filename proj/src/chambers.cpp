#include "kss/chambers.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace kss {

namespace {

QVec vertex_barycenter(const Polytope& p) {
  QVec s = zero_vec(p.ambient);
  for (const QVec& v : p.vertices) s = add(s, v);
  return scale(s, Rat(1, Int(p.vertices.size())));
}

std::string point_str(const QVec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(x[i]);
  }
  return s + ")";
}

}  // namespace

WallSet collect_walls(const std::vector<Model>& family) {
  WallSet ws;
  bool have_k = false;
  for (const Model& m : family) {
    std::size_t k = model_k(m);
    if (!have_k) {
      ws.k = k;
      have_k = true;
    } else if (ws.k != k) {
      throw input_error("family mixes models with different numbers of boundaries");
    }
  }

  std::vector<Hyperplane> walls;
  auto harvest = [&](const Polytope& p) {
    for (const Halfspace& h : p.halfspaces) walls.push_back(h.boundary);
  };
  for (const Model& m : family) {
    DomainProblem p = problem_of(m);
    harvest(kss_domain(p).domain);
    harvest(lc_polytope(p));
  }
  harvest(standard_simplex(ws.k));

  std::sort(walls.begin(), walls.end(),
            [](const Hyperplane& a, const Hyperplane& b) { return compare(a, b) < 0; });
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  ws.hyperplanes = std::move(walls);
  return ws;
}

ChamberComplex chamber_complex(const std::vector<Model>& family) {
  ChamberComplex cc;
  cc.walls = collect_walls(family);
  const std::size_t k = cc.walls.k;

  // Depth-first sign branching: refine the simplex wall by wall, keeping
  // only branches with a full-dimensional cell. Exactness of the polytope
  // kernel makes each feasibility decision a certificate.
  std::vector<Polytope> cells{standard_simplex(k)};
  for (const Hyperplane& w : cc.walls.hyperplanes) {
    std::vector<Polytope> next;
    for (const Polytope& cell : cells) {
      for (int side : {+1, -1}) {
        Polytope piece = intersect(cell, {Halfspace{w, side}});
        if (piece.dim == static_cast<int>(k)) next.push_back(std::move(piece));
      }
    }
    cells = std::move(next);
  }

  std::vector<DomainProblem> problems;
  problems.reserve(family.size());
  for (const Model& m : family) problems.push_back(problem_of(m));

  for (Polytope& cell : cells) {
    Chamber ch;
    ch.sample = vertex_barycenter(cell);
    for (const Hyperplane& w : cc.walls.hyperplanes) {
      int s = sign(w.eval(ch.sample));
      if (s == 0) {
        throw invariant_violation("chamber sample lies on a wall at " +
                                  point_str(ch.sample));
      }
      ch.sign_vector += s > 0 ? '+' : '-';
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      ch.statuses.emplace_back(model_name(family[i]),
                               delta_at(problems[i], ch.sample).status);
    }
    ch.closure = std::move(cell);
    cc.chambers.push_back(std::move(ch));
  }
  std::sort(cc.chambers.begin(), cc.chambers.end(),
            [](const Chamber& a, const Chamber& b) {
              return a.closure.vertices < b.closure.vertices;
            });

  for (std::size_t i = 0; i < cc.chambers.size(); ++i) {
    for (std::size_t j = i + 1; j < cc.chambers.size(); ++j) {
      const Chamber& a = cc.chambers[i];
      const Chamber& b = cc.chambers[j];
      std::size_t diff = 0, wall_idx = 0;
      for (std::size_t w = 0; w < cc.walls.hyperplanes.size(); ++w) {
        if (a.sign_vector[w] != b.sign_vector[w]) {
          ++diff;
          wall_idx = w;
        }
      }
      if (diff != 1) continue;
      Polytope shared = intersect(a.closure, b.closure.halfspaces);
      if (shared.dim != static_cast<int>(k) - 1) continue;
      WallGraphEdge e;
      e.a = i;
      e.b = j;
      e.wall = cc.walls.hyperplanes[wall_idx];
      for (std::size_t m = 0; m < a.statuses.size(); ++m) {
        if (a.statuses[m].second != b.statuses[m].second) {
          e.changed_models.push_back(a.statuses[m].first);
        }
      }
      cc.edges.push_back(std::move(e));
    }
  }
  return cc;
}

FaceConstancyReport face_constancy_check(const ChamberComplex& cc,
                                         const std::vector<Model>& family,
                                         unsigned samples_per_face) {
  if (samples_per_face == 0) throw input_error("need at least one sample per face");
  FaceConstancyReport rep;
  std::vector<DomainProblem> problems;
  for (const Model& m : family) problems.push_back(problem_of(m));
  std::mt19937_64 rng(0xfacadeULL);

  for (const Chamber& ch : cc.chambers) {
    ++rep.chambers;
    for (int d = 0; d <= ch.closure.dim; ++d) {
      for (const Polytope& face : faces(ch.closure, d)) {
        ++rep.faces;
        // Relative-interior points: strictly positive rational convex
        // combinations of the face's vertices.
        std::vector<QVec> pts;
        for (unsigned s = 0; s < samples_per_face; ++s) {
          QVec x = zero_vec(face.ambient);
          Rat total = 0;
          std::vector<Rat> w(face.vertices.size());
          for (auto& wi : w) {
            std::uniform_int_distribution<long> dist(1, 16);
            wi = Rat(dist(rng));
            total += wi;
          }
          for (std::size_t v = 0; v < face.vertices.size(); ++v) {
            x = add(x, scale(face.vertices[v], w[v] / total));
          }
          pts.push_back(std::move(x));
        }
        for (std::size_t m = 0; m < family.size(); ++m) {
          KStatus first = delta_at(problems[m], pts[0]).status;
          ++rep.evaluations;
          for (std::size_t s = 1; s < pts.size(); ++s) {
            KStatus other = delta_at(problems[m], pts[s]).status;
            ++rep.evaluations;
            if (other != first) {
              throw invariant_violation(
                  "status of '" + model_name(family[m]) + "' changes inside a face: " +
                  to_string(first) + " at " + point_str(pts[0]) + " vs " +
                  to_string(other) + " at " + point_str(pts[s]) +
                  " (missing wall)");
            }
          }
        }
      }
    }
  }
  return rep;
}

CrossingReport crossing_report(const ChamberComplex& cc, const Model& model,
                               const QVec& w1, const QVec& w2) {
  const std::size_t k = cc.walls.k;
  if (w1.size() != k || w2.size() != k) {
    throw input_error("crossing endpoints of wrong dimension");
  }
  if (w1 == w2) throw degenerate_error("crossing endpoints coincide");
  DomainProblem p = problem_of(model);

  CrossingReport rep;
  rep.from = w1;
  rep.to = w2;
  QVec dir = sub(w2, w1);
  auto at = [&](const Rat& t) { return add(w1, scale(dir, t)); };

  std::map<Rat, std::vector<Hyperplane>> hits;
  for (const Hyperplane& h : cc.walls.hyperplanes) {
    Rat e1 = h.eval(w1);
    Rat e2 = h.eval(w2);
    if (e1 == 0 || e2 == 0) {
      throw degenerate_error("endpoint lies on wall " + h.to_string() +
                             "; nudge it off the wall");
    }
    if (sign(e1) == sign(e2)) continue;
    hits[e1 / (e1 - e2)].push_back(h);
  }

  std::vector<Rat> cuts{Rat(0)};
  for (auto& [t, walls] : hits) {
    CrossingEvent ev;
    ev.t = t;
    ev.point = at(t);
    ev.walls = std::move(walls);
    ev.status = delta_at(p, ev.point).status;
    rep.crossings.push_back(std::move(ev));
    cuts.push_back(t);
  }
  cuts.push_back(Rat(1));

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    CrossingSegment seg;
    seg.t_begin = cuts[i];
    seg.t_end = cuts[i + 1];
    Rat mid = (cuts[i] + cuts[i + 1]) / 2;
    seg.sample = at(mid);
    seg.status = delta_at(p, seg.sample).status;
    rep.segments.push_back(std::move(seg));
  }
  return rep;
}

}  // namespace kss
