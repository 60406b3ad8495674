#ifndef KSS_CHAMBERS_HPP
#define KSS_CHAMBERS_HPP

#include <string>
#include <vector>

#include "kss/domains.hpp"

namespace kss {

// Canonical deduplicated hyperplanes harvested from the facets of every
// model's K-semistable domain and LC polytope plus the simplex facets.
struct WallSet {
  std::size_t k = 0;
  std::vector<Hyperplane> hyperplanes;
};

WallSet collect_walls(const std::vector<Model>& family);

// Closed full-dimensional cell of the wall arrangement inside the simplex.
struct Chamber {
  std::string sign_vector;  // '+'/'-' per wall, in wall order
  Polytope closure;
  QVec sample;  // vertex barycenter, rational and interior
  std::vector<std::pair<std::string, KStatus>> statuses;  // model name -> status
};

struct WallGraphEdge {
  std::size_t a = 0, b = 0;  // chamber indices, a < b
  Hyperplane wall;
  std::vector<std::string> changed_models;
};

struct ChamberComplex {
  WallSet walls;
  std::vector<Chamber> chambers;
  std::vector<WallGraphEdge> edges;
};

// Enumerates the full-dimensional chambers by depth-first sign branching
// on the walls with exact feasibility at each step, samples each chamber
// at its vertex barycenter, and evaluates every model there. Output order
// is canonical.
ChamberComplex chamber_complex(const std::vector<Model>& family);

struct FaceConstancyReport {
  unsigned chambers = 0;
  unsigned faces = 0;
  unsigned evaluations = 0;
};

// For every face of every chamber (the chamber itself included), draws
// rational points of the relative interior and requires every model's
// status to be constant across them. A violation names the witnesses and
// indicates a missing wall.
FaceConstancyReport face_constancy_check(const ChamberComplex& cc,
                                         const std::vector<Model>& family,
                                         unsigned samples_per_face);

struct CrossingEvent {
  Rat t;
  QVec point;
  std::vector<Hyperplane> walls;
  KStatus status;
};

struct CrossingSegment {
  Rat t_begin, t_end;
  QVec sample;
  KStatus status;
};

struct CrossingReport {
  QVec from, to;
  std::vector<CrossingEvent> crossings;  // ordered along the segment
  std::vector<CrossingSegment> segments;
};

// Exact rational intersections of the segment [w1, w2] with the walls it
// crosses, with the model's status on each open piece and at each crossing
// point. Endpoints on a wall are rejected (nudge required).
CrossingReport crossing_report(const ChamberComplex& cc, const Model& model,
                               const QVec& w1, const QVec& w2);

}  // namespace kss

#endif
