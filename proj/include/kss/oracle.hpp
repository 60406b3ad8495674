#ifndef KSS_ORACLE_HPP
#define KSS_ORACLE_HPP

#include <map>

#include "kss/domains.hpp"

namespace kss {

struct OracleReport {
  unsigned n = 0;
  unsigned points = 0;
  std::map<KStatus, unsigned> counts;
  QMat mismatches;  // grid points where classification and membership split
};

// Brute-force check of the domain: classifies every grid point
// (i_1/n, ..., i_k/n) of the closed simplex pointwise and compares with
// polytope membership. Facet points count as inside (the domain is closed),
// so they must classify KSS or CY_LC.
OracleReport grid_oracle(const Model& m, unsigned n);

}  // namespace kss

#endif
