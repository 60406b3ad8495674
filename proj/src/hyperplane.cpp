#include "kss/hyperplane.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "kss/errors.hpp"

namespace kss {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Positive scalar turning v into a coprime integer vector.
Rat integral_scale(const QVec& v) {
  Int den = 1;
  for (const Rat& x : v) den = lcm(den, denominator(x));
  Int num = 0;
  for (const Rat& x : v) num = gcd(num, Int(numerator(x) * (den / denominator(x))));
  return Rat(den, num);  // num > 0 since v != 0
}

}  // namespace

Hyperplane Hyperplane::make(QVec normal, Rat offset) {
  if (is_zero(normal)) throw degenerate_error("hyperplane normal is zero");
  Rat t = integral_scale(normal);
  for (const Rat& x : normal) {
    if (x != 0) {
      if (x < 0) t = -t;
      break;
    }
  }
  return Hyperplane{scale(normal, t), offset * t};
}

Rat Hyperplane::eval(const QVec& x) const { return dot(normal, x) - offset; }

std::string Hyperplane::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < normal.size(); ++j) {
    if (normal[j] == 0) continue;
    if (!s.empty() && normal[j] > 0) s += "+";
    if (normal[j] == -1) {
      s += "-";
    } else if (normal[j] != 1) {
      s += rat_to_string(normal[j]);
    }
    s += "x" + std::to_string(j + 1);
  }
  if (s.empty()) s = "0";
  return s + "=" + rat_to_string(offset);
}

int compare(const Hyperplane& a, const Hyperplane& b) {
  int c = lex_compare(a.normal, b.normal);
  if (c != 0) return c;
  if (a.offset < b.offset) return -1;
  return a.offset > b.offset ? 1 : 0;
}

Halfspace Halfspace::geq(QVec normal, Rat offset) {
  if (is_zero(normal)) throw degenerate_error("halfspace normal is zero");
  bool flipped = false;
  for (const Rat& x : normal) {
    if (x != 0) {
      flipped = x < 0;
      break;
    }
  }
  return Halfspace{Hyperplane::make(std::move(normal), std::move(offset)),
                   flipped ? -1 : +1};
}

std::pair<QVec, Rat> Halfspace::oriented() const {
  if (side > 0) return {boundary.normal, boundary.offset};
  return {scale(boundary.normal, Rat(-1)), -boundary.offset};
}

bool Halfspace::contains(const QVec& x) const {
  return side * sign(boundary.eval(x)) >= 0;
}

bool Halfspace::strictly_contains(const QVec& x) const {
  return side * sign(boundary.eval(x)) > 0;
}

int compare(const Halfspace& a, const Halfspace& b) {
  int c = compare(a.boundary, b.boundary);
  if (c != 0) return c;
  return a.side - b.side;
}

Hyperplane hyperplane_through_points(const QMat& points) {
  if (points.empty()) throw degenerate_error("no points given");
  std::size_t n = points[0].size();
  if (points.size() != n) {
    throw degenerate_error("need exactly n points in ambient dimension n");
  }
  auto [dim, hs] = affine_hull(points);
  if (dim + 1 != n || hs.size() != 1) {
    throw degenerate_error("points are affinely dependent");
  }
  return hs[0];
}

std::pair<std::size_t, std::vector<Hyperplane>> affine_hull(const QMat& points) {
  if (points.empty()) throw degenerate_error("affine hull of empty set");
  std::size_t n = points[0].size();
  QMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(sub(points[i], points[0]));
  }
  std::size_t dim = diffs.empty() ? 0 : rank(diffs);
  std::vector<Hyperplane> hs;
  if (dim == n) return {dim, hs};
  QMat normals = null_space(diffs, n);
  for (QVec& nv : normals) {
    Rat off = dot(nv, points[0]);
    hs.push_back(Hyperplane::make(std::move(nv), std::move(off)));
  }
  return {dim, hs};
}

QVec vertex_from_facets(const std::vector<Hyperplane>& hs) {
  if (hs.empty()) throw degenerate_error("no facets given");
  std::size_t n = hs[0].normal.size();
  QMat a;
  QVec b;
  for (const Hyperplane& h : hs) {
    if (h.normal.size() != n) throw input_error("mixed ambient dimensions");
    a.push_back(h.normal);
    b.push_back(h.offset);
  }
  if (rank(a) != n) throw degenerate_error("facets do not meet in a single point");
  auto x = solve_linear(a, b);
  if (!x) throw degenerate_error("facets have no common point");
  return *x;
}

}  // namespace kss
