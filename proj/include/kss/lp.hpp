#ifndef KSS_LP_HPP
#define KSS_LP_HPP

#include <vector>

#include "kss/hyperplane.hpp"
#include "kss/linalg.hpp"

namespace kss {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;   // objective value when Optimal
  QVec point;  // a point attaining it
};

// Exact rational linear program over free variables:
//   minimize <objective, x>  subject to  <h.normal, x> >= / <= h.offset.
// Two-phase primal simplex with Bland's rule; every pivot is exact, so the
// status and value are certificates, not approximations.
LpResult lp_minimize(const std::vector<Halfspace>& constraints,
                     const QVec& objective);
LpResult lp_maximize(const std::vector<Halfspace>& constraints,
                     const QVec& objective);

}  // namespace kss

#endif
