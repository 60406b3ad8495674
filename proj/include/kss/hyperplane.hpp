#ifndef KSS_HYPERPLANE_HPP
#define KSS_HYPERPLANE_HPP

#include <string>
#include <utility>
#include <vector>

#include "kss/linalg.hpp"

namespace kss {

// {x : <normal, x> = offset} in canonical form: normal entries are coprime
// integers and the first nonzero entry is positive, so hyperplanes compare
// and deduplicate by plain equality. The offset stays rational.
struct Hyperplane {
  QVec normal;
  Rat offset;

  // Canonicalizes; rejects a zero normal.
  static Hyperplane make(QVec normal, Rat offset);

  Rat eval(const QVec& x) const;  // <normal, x> - offset
  bool operator==(const Hyperplane& o) const = default;
  std::string to_string() const;  // e.g. "2x1+3x2=1"
};

int compare(const Hyperplane& a, const Hyperplane& b);

// Closed halfspace bounded by a canonical hyperplane. side = +1 means
// {x : <normal, x> >= offset}, side = -1 the mirror region.
struct Halfspace {
  Hyperplane boundary;
  int side = +1;

  // From a raw inequality <normal, x> >= offset; the side flag absorbs the
  // sign flip canonicalization may apply.
  static Halfspace geq(QVec normal, Rat offset);

  // Oriented (normal, offset) with the region always <normal, x> >= offset.
  std::pair<QVec, Rat> oriented() const;

  bool contains(const QVec& x) const;         // closed
  bool strictly_contains(const QVec& x) const;
  bool operator==(const Halfspace& o) const = default;
};

int compare(const Halfspace& a, const Halfspace& b);

// The unique hyperplane through n affinely independent points in ambient
// dimension n; rational in canonical integer form by construction.
Hyperplane hyperplane_through_points(const QMat& points);

// Affine hull of a nonempty rational point set: its dimension plus
// canonical rational hyperplanes whose intersection is exactly the hull.
std::pair<std::size_t, std::vector<Hyperplane>> affine_hull(const QMat& points);

// The unique common point of the given hyperplanes; degenerate input
// (no point or more than one) is an error.
QVec vertex_from_facets(const std::vector<Hyperplane>& hs);

}  // namespace kss

#endif
