#include "kss/oracle.hpp"

namespace kss {

OracleReport grid_oracle(const Model& m, unsigned n) {
  if (n < 2) throw input_error("grid resolution must be at least 2");
  DomainProblem p = problem_of(m);
  KssDomainResult dom = kss_domain(p);

  OracleReport rep;
  rep.n = n;

  std::vector<unsigned> idx(p.k, 0);
  for (;;) {
    unsigned total = 0;
    for (unsigned i : idx) total += i;
    if (total <= n) {
      QVec x(p.k);
      for (std::size_t j = 0; j < p.k; ++j) x[j] = Rat(idx[j], n);
      KStatus s = delta_at(p, x).status;
      ++rep.counts[s];
      ++rep.points;
      bool semistable = s == KStatus::KSS || s == KStatus::CY_LC;
      if (semistable != contains(dom.domain, x)) rep.mismatches.push_back(x);
    }
    // next multi-index with entries in [0, n]
    std::size_t j = 0;
    while (j < p.k) {
      if (idx[j] < n) {
        ++idx[j];
        break;
      }
      idx[j] = 0;
      ++j;
    }
    if (j == p.k) break;  // k == 0 visits the single empty vector once
  }
  return rep;
}

}  // namespace kss
