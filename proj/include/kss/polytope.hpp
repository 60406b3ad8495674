#ifndef KSS_POLYTOPE_HPP
#define KSS_POLYTOPE_HPP

#include <vector>

#include "kss/errors.hpp"
#include "kss/hyperplane.hpp"
#include "kss/linalg.hpp"

namespace kss {

struct unbounded_error : degenerate_error {
  using degenerate_error::degenerate_error;
};

// Bounded rational polytope carrying both representations: a canonical
// irredundant halfspace list and the exact extreme points, cross-checked at
// construction. The empty polytope (dim -1) and lower-dimensional polytopes
// are ordinary values; immutable once built.
struct Polytope {
  std::size_t ambient = 0;
  std::vector<Halfspace> halfspaces;  // sorted, deduplicated, irredundant
  QMat vertices;                      // lex sorted
  int dim = -1;

  bool empty() const { return vertices.empty(); }
};

// Intersects the given halfspaces. Infeasible input yields the empty
// polytope; an unbounded region throws unbounded_error (detected by LP in
// each coordinate direction before vertices are enumerated).
Polytope from_halfspaces(std::size_t ambient, std::vector<Halfspace> hs);

// p restricted by additional halfspaces.
Polytope intersect(const Polytope& p, const std::vector<Halfspace>& extra);

// The closed standard simplex {x >= 0, sum x <= 1} in dimension k.
Polytope standard_simplex(std::size_t k);

Rat volume(const Polytope& p);  // Euclidean; 0 unless dim == ambient
QVec barycenter(const Polytope& p);

// Exact integral of <form, y> + constant over p (dim == ambient).
Rat integrate_linear(const Polytope& p, const QVec& form, const Rat& constant);

struct LinOpt {
  Rat value;
  QVec argmin;  // witnessing vertex, lex-first among optima
};

// Exact LP over p, cross-checked against the vertex scan.
LinOpt minimize_linear(const Polytope& p, const QVec& form);
LinOpt maximize_linear(const Polytope& p, const QVec& form);

// True iff p has vertices strictly on both sides of h.
bool separates(const Hyperplane& h, const Polytope& p);

bool contains(const Polytope& p, const QVec& x);
bool equal(const Polytope& p, const Polytope& q);

// All faces of the given dimension, each with its own H-representation;
// includes p itself when dim == p.dim. Deterministically ordered.
std::vector<Polytope> faces(const Polytope& p, int dim);

// Full-dimensional triangulation fanned from a vertex of each face; the
// root_last flag switches the fan root so callers can cross-check volumes.
std::vector<QMat> triangulate(const Polytope& p, bool root_last = false);

}  // namespace kss

#endif
