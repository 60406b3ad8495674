#ifndef KSS_DOMAINS_HPP
#define KSS_DOMAINS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kss/polytope.hpp"
#include "kss/toric.hpp"

namespace kss {

// One divisorial valuation with the data the beta form needs: the log
// discrepancy A, the expected vanishing order S, and the vanishing orders
// along the k boundary divisors.
struct ValuationRow {
  std::string label;
  Rat A;
  Rat S;
  QVec ord;  // length k
};

// Finite valuation table for non-toric pairs. Results derived from a table
// are certified only if the user asserts the table is complete.
struct ValuationTable {
  std::string name;
  std::size_t k = 0;
  std::vector<ValuationRow> rows;
  std::vector<Halfspace> lc_halfspaces;  // log canonical region beyond x >= 0
  bool certified = false;
};

ValuationTable validate_table(ValuationTable t);

using Model = std::variant<PairModel, ValuationTable>;

const std::string& model_name(const Model& m);
std::size_t model_k(const Model& m);

// Uniform view of either model kind: rows plus the labelled log canonical
// constraints. Toric models quantify over the fan rays and derive the LC
// constraints from the ray coefficient sums.
struct LcConstraint {
  std::string label;
  Halfspace hs;
};

struct DomainProblem {
  std::size_t k = 0;
  std::vector<ValuationRow> rows;
  std::vector<LcConstraint> lc;
  bool certified = false;
};

DomainProblem problem_of(const PairModel& pm);
DomainProblem problem_of(const ValuationTable& t);
DomainProblem problem_of(const Model& m);

// The affine form x -> A(E) - sum_j x_j ord_E(D_j) - (1 - sum_j x_j) S(E),
// stored as constant + <coeffs, x> with constant = A - S, coeffs_j = S - ord_j.
struct BetaForm {
  std::string label;
  Rat constant;
  QVec coeffs;

  Rat eval(const QVec& x) const { return constant + dot(coeffs, x); }
};

BetaForm beta_form(const ValuationRow& row);
std::vector<BetaForm> beta_forms(const DomainProblem& p);

// {x >= 0 : every log canonical constraint holds}.
Polytope lc_polytope(const DomainProblem& p);

enum class KStatus { KSS, UNSTABLE, CY_LC, CY_NOT_LC, NOT_LOG_FANO };
std::string to_string(KStatus s);

struct DeltaReport {
  QVec x;
  KStatus status;
  std::optional<Rat> delta;
  std::optional<Rat> delta_tilde;  // min(delta, 1)
  std::optional<std::string> minimizer;
};

// Pointwise K-semistability classification at a rational point of the
// closed simplex. On the Calabi-Yau face (sum x = 1) semistability is the
// log canonical condition; off it, delta is the minimum of
// (A - <x, ord>) / ((1 - sum x) S) over the rows, first row wins ties.
DeltaReport delta_at(const DomainProblem& p, const QVec& x);

struct FacetProvenance {
  Hyperplane facet;
  std::vector<std::string> labels;
};

struct KssDomainResult {
  Polytope domain;
  bool in_E = false;
  std::optional<Rat> mu;   // min of sum x over the domain
  std::optional<Rat> gap;  // 1 - mu
  std::optional<std::pair<Rat, Rat>> interval;  // k == 1 only
  bool certified = false;
  // True when the (nonempty) domain meets neither the open klt locus nor
  // anything off the CY face; the closed intersection may then differ from
  // the closure of the semistable locus.
  bool klt_interior_empty = false;
  std::vector<FacetProvenance> facet_provenance;
};

// simplex  ∩  LC region  ∩  {beta >= 0 for every row}.
KssDomainResult kss_domain(const DomainProblem& p);

struct ConsistencyReport {
  unsigned samples = 0;
  unsigned inside_checked = 0;
  unsigned outside_checked = 0;
  unsigned scaling_checked = 0;
};

// Samples rational points inside and outside the domain and requires the
// pointwise classification to agree with polytope membership; for toric
// models also recomputes delta through the pair polytope to pin the
// scaling relation S_{X,cD} = (1-c) S_X. Throws invariant_violation with
// the witness point on any mismatch.
ConsistencyReport consistency_check(const Model& m, unsigned samples);

}  // namespace kss

#endif
