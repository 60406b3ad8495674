#ifndef KSS_TORIC_HPP
#define KSS_TORIC_HPP

#include <string>
#include <vector>

#include "kss/polytope.hpp"

namespace kss {

// Maximal cone of the fan, dual to one vertex of the anticanonical
// polytope: spanned by the rays whose facets meet at that vertex.
struct MaximalCone {
  QVec vertex;
  std::vector<std::size_t> ray_indices;
};

// Complete simplicial toric Fano model derived from its fan rays. The
// anticanonical polytope P = {y : <y, r_i> >= -1}, the maximal cones, and
// the anticanonical degree are computed and cross-checked at validation.
struct ToricFanoModel {
  std::size_t d = 0;
  QMat rays;  // primitive integer vectors
  Polytope anticanonical;
  std::vector<MaximalCone> cones;
  Rat degree;  // d! * volume(P)
};

// Torus-invariant divisor D = sum a_i D_{r_i} with D ~ -K_X, certified by a
// witness m with a_i - 1 = <m, r_i>.
struct ToricDivisor {
  std::string name;
  QVec coeffs;
  QVec witness;
  Int index;  // smallest I with I*m and all I*a_i integral
};

struct ToricDivisorInput {
  std::string name;
  QVec coeffs;
};

struct PairModel {
  std::string name;
  ToricFanoModel base;
  std::vector<ToricDivisor> divisors;

  std::size_t k() const { return divisors.size(); }
};

// Validates rays and divisors; throws validation_error with one of the
// reason codes NON_PRIMITIVE_RAY, NOT_FANO, NON_SIMPLICIAL_CONE,
// NOT_EFFECTIVE, NOT_ANTICANONICAL.
PairModel validate_model(std::string name, const QMat& rays,
                         const std::vector<ToricDivisorInput>& divisors);

// Barycentric coordinates of u in the first maximal cone containing it.
struct ConePoint {
  std::size_t cone;
  QVec lambda;  // nonnegative, indexed like cones[cone].ray_indices
};
ConePoint find_cone(const ToricFanoModel& m, const QVec& u);

// Log discrepancy of the toric valuation v_u, computed both as the lambda
// sum over the containing cone and as -<u, vertex>; the two must agree.
Rat log_discrepancy(const ToricFanoModel& m, const QVec& u);

// Vanishing order of D along v_u: the piecewise-linear extension of the
// ray coefficients.
Rat div_order(const ToricFanoModel& m, const ToricDivisor& div, const QVec& u);

Rat s_invariant(const ToricFanoModel& m, const QVec& u);
Rat t_invariant(const ToricFanoModel& m, const QVec& u);

// m-th basis-type approximation of S via lattice points of the dilation.
Rat s_m_invariant(const ToricFanoModel& m, const QVec& u, unsigned dilation);

// S of the pair (X, sum x_j D_j) computed directly on the polytope of
// -(K_X + sum x_j D_j); independent route for the scaling relation
// S_pair = (1 - sum x) * S.
Rat s_pair_direct(const PairModel& pm, const QVec& x, const QVec& u);

// Lattice points of the dilation t*P.
QMat dilated_lattice_points(const ToricFanoModel& m, unsigned t);

std::string ray_label(const QVec& ray);

}  // namespace kss

#endif
