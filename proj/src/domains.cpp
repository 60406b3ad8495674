#include "kss/domains.hpp"

#include <algorithm>
#include <random>

namespace kss {

ValuationTable validate_table(ValuationTable t) {
  if (t.rows.empty()) {
    throw validation_error("INVALID_TABLE", "valuation table has no rows");
  }
  for (const ValuationRow& r : t.rows) {
    if (r.ord.size() != t.k) {
      throw input_error("row '" + r.label + "' needs " + std::to_string(t.k) +
                        " vanishing orders");
    }
    if (r.A <= 0) {
      throw validation_error("INVALID_TABLE",
                             "row '" + r.label + "' has non-positive log discrepancy");
    }
    if (r.S <= 0) {
      throw validation_error("INVALID_TABLE",
                             "row '" + r.label + "' has non-positive S");
    }
    for (const Rat& o : r.ord) {
      if (o < 0) {
        throw validation_error("INVALID_TABLE",
                               "row '" + r.label + "' has a negative vanishing order");
      }
    }
  }
  for (const Halfspace& h : t.lc_halfspaces) {
    if (h.boundary.normal.size() != t.k) {
      throw input_error("lc halfspace of wrong dimension");
    }
  }
  return t;
}

const std::string& model_name(const Model& m) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; }, m);
}

std::size_t model_k(const Model& m) {
  if (const auto* pm = std::get_if<PairModel>(&m)) return pm->k();
  return std::get<ValuationTable>(m).k;
}

DomainProblem problem_of(const PairModel& pm) {
  DomainProblem p;
  p.k = pm.k();
  p.certified = true;
  const ToricFanoModel& base = pm.base;
  for (std::size_t i = 0; i < base.rays.size(); ++i) {
    ValuationRow row;
    row.label = ray_label(base.rays[i]);
    row.A = 1;  // primitive ray generators
    row.S = s_invariant(base, base.rays[i]);
    for (const ToricDivisor& d : pm.divisors) row.ord.push_back(d.coeffs[i]);
    p.rows.push_back(std::move(row));

    // Log canonical condition along this ray: sum_j x_j a_{j,i} <= 1.
    QVec normal(p.k);
    for (std::size_t j = 0; j < p.k; ++j) normal[j] = -pm.divisors[j].coeffs[i];
    if (!is_zero(normal)) {
      p.lc.push_back({"lc:" + ray_label(base.rays[i]),
                      Halfspace::geq(std::move(normal), Rat(-1))});
    }
  }
  return p;
}

DomainProblem problem_of(const ValuationTable& t) {
  DomainProblem p;
  p.k = t.k;
  p.certified = t.certified;
  p.rows = t.rows;
  for (std::size_t i = 0; i < t.lc_halfspaces.size(); ++i) {
    p.lc.push_back({"lc:" + std::to_string(i), t.lc_halfspaces[i]});
  }
  return p;
}

DomainProblem problem_of(const Model& m) {
  return std::visit([](const auto& v) { return problem_of(v); }, m);
}

BetaForm beta_form(const ValuationRow& row) {
  BetaForm b;
  b.label = row.label;
  b.constant = row.A - row.S;
  for (const Rat& o : row.ord) b.coeffs.push_back(row.S - o);
  return b;
}

std::vector<BetaForm> beta_forms(const DomainProblem& p) {
  std::vector<BetaForm> out;
  out.reserve(p.rows.size());
  for (const ValuationRow& r : p.rows) out.push_back(beta_form(r));
  return out;
}

Polytope lc_polytope(const DomainProblem& p) {
  std::vector<Halfspace> hs;
  for (std::size_t j = 0; j < p.k; ++j) {
    QVec e = zero_vec(p.k);
    e[j] = 1;
    hs.push_back(Halfspace::geq(std::move(e), Rat(0)));
  }
  for (const LcConstraint& c : p.lc) hs.push_back(c.hs);
  return from_halfspaces(p.k, std::move(hs));
}

std::string to_string(KStatus s) {
  switch (s) {
    case KStatus::KSS: return "KSS";
    case KStatus::UNSTABLE: return "UNSTABLE";
    case KStatus::CY_LC: return "CY_LC";
    case KStatus::CY_NOT_LC: return "CY_NOT_LC";
    case KStatus::NOT_LOG_FANO: return "NOT_LOG_FANO";
  }
  return "?";
}

namespace {

Rat coeff_sum(const QVec& x) {
  Rat s = 0;
  for (const Rat& v : x) s += v;
  return s;
}

bool lc_holds(const DomainProblem& p, const QVec& x, bool strict) {
  for (const LcConstraint& c : p.lc) {
    if (strict ? !c.hs.strictly_contains(x) : !c.hs.contains(x)) return false;
  }
  return true;
}

}  // namespace

DeltaReport delta_at(const DomainProblem& p, const QVec& x) {
  if (x.size() != p.k) throw input_error("coefficient vector of wrong length");
  Rat sigma = 0;
  for (const Rat& v : x) {
    if (v < 0) throw degenerate_error("coefficient outside the closed simplex");
    sigma += v;
  }
  if (sigma > 1) throw degenerate_error("coefficient outside the closed simplex");

  DeltaReport rep;
  rep.x = x;
  if (sigma == 1) {
    rep.status = lc_holds(p, x, false) ? KStatus::CY_LC : KStatus::CY_NOT_LC;
    return rep;
  }
  if (!lc_holds(p, x, true)) {
    rep.status = KStatus::NOT_LOG_FANO;
    return rep;
  }
  Rat one_minus = Rat(1) - sigma;
  std::optional<Rat> best;
  for (const ValuationRow& row : p.rows) {
    Rat ratio = (row.A - dot(x, row.ord)) / (one_minus * row.S);
    if (!best || ratio < *best) {
      best = ratio;
      rep.minimizer = row.label;
    }
  }
  if (!best) throw invariant_violation("no valuation rows to minimize over");
  rep.delta = *best;
  rep.delta_tilde = std::min(*best, Rat(1));
  rep.status = *best >= 1 ? KStatus::KSS : KStatus::UNSTABLE;
  return rep;
}

KssDomainResult kss_domain(const DomainProblem& p) {
  KssDomainResult res;
  res.certified = p.certified;

  std::vector<std::pair<Halfspace, std::string>> constraints;
  for (std::size_t j = 0; j < p.k; ++j) {
    QVec e = zero_vec(p.k);
    e[j] = 1;
    constraints.emplace_back(Halfspace::geq(std::move(e), Rat(0)),
                             "simplex:x" + std::to_string(j + 1) + ">=0");
  }
  if (p.k > 0) {
    constraints.emplace_back(Halfspace::geq(QVec(p.k, Rat(-1)), Rat(-1)),
                             "simplex:sum<=1");
  }
  for (const LcConstraint& c : p.lc) constraints.emplace_back(c.hs, c.label);

  bool beta_infeasible = false;
  for (const BetaForm& b : beta_forms(p)) {
    if (is_zero(b.coeffs)) {
      if (b.constant < 0) beta_infeasible = true;
      continue;  // constant form: either vacuous or globally infeasible
    }
    constraints.emplace_back(Halfspace::geq(b.coeffs, -b.constant), b.label);
  }

  if (beta_infeasible) {
    res.domain.ambient = p.k;
    return res;
  }

  std::vector<Halfspace> hs;
  hs.reserve(constraints.size());
  for (const auto& [h, label] : constraints) hs.push_back(h);
  res.domain = from_halfspaces(p.k, std::move(hs));

  for (const Halfspace& h : res.domain.halfspaces) {
    auto it = std::find_if(res.facet_provenance.begin(), res.facet_provenance.end(),
                           [&](const FacetProvenance& f) { return f.facet == h.boundary; });
    if (it != res.facet_provenance.end()) continue;
    FacetProvenance fp;
    fp.facet = h.boundary;
    for (const auto& [ch, label] : constraints) {
      if (ch.boundary == h.boundary) fp.labels.push_back(label);
    }
    std::sort(fp.labels.begin(), fp.labels.end());
    fp.labels.erase(std::unique(fp.labels.begin(), fp.labels.end()), fp.labels.end());
    res.facet_provenance.push_back(std::move(fp));
  }
  std::sort(res.facet_provenance.begin(), res.facet_provenance.end(),
            [](const FacetProvenance& a, const FacetProvenance& b) {
              return compare(a.facet, b.facet) < 0;
            });

  if (res.domain.empty()) return res;

  res.mu = minimize_linear(res.domain, QVec(p.k, Rat(1))).value;
  res.gap = Rat(1) - *res.mu;
  res.in_E = *res.mu < 1;
  if (p.k == 1) {
    QVec e{Rat(1)};
    res.interval = {minimize_linear(res.domain, e).value,
                    maximize_linear(res.domain, e).value};
  }

  // Relative-interior sample: if it is not a klt point off the CY face,
  // no domain point is, and the closed intersection may exceed the closure
  // of the semistable locus.
  QVec sample = zero_vec(p.k);
  for (const QVec& v : res.domain.vertices) sample = add(sample, v);
  sample = scale(sample, Rat(1, Int(res.domain.vertices.size())));
  res.klt_interior_empty = !(coeff_sum(sample) < 1 && lc_holds(p, sample, true));
  return res;
}

namespace {

Rat random_rat(std::mt19937_64& rng, long den, long lo_num, long hi_num) {
  std::uniform_int_distribution<long> d(lo_num, hi_num);
  return Rat(d(rng), den);
}

QVec random_simplex_point(std::mt19937_64& rng, std::size_t k) {
  const long den = 64;
  for (;;) {
    QVec x(k);
    long total = 0;
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      std::uniform_int_distribution<long> d(0, den);
      long n = d(rng);
      total += n;
      if (total > den) {
        ok = false;
        break;
      }
      x[j] = Rat(n, den);
    }
    if (ok) return x;
  }
}

bool semistable(KStatus s) { return s == KStatus::KSS || s == KStatus::CY_LC; }

std::string point_str(const QVec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(x[i]);
  }
  return s + ")";
}

}  // namespace

ConsistencyReport consistency_check(const Model& m, unsigned samples) {
  const DomainProblem p = problem_of(m);
  const KssDomainResult dom = kss_domain(p);
  ConsistencyReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(0x5eed5eedULL);

  auto check_point = [&](const QVec& x) {
    bool member = contains(dom.domain, x);
    bool ss = semistable(delta_at(p, x).status);
    if (member != ss) {
      throw invariant_violation("classification disagrees with the domain at " +
                                point_str(x));
    }
  };

  // Points of the domain itself, as convex combinations of its vertices.
  if (!dom.domain.empty()) {
    for (unsigned i = 0; i < samples; ++i) {
      QVec x = zero_vec(p.k);
      Rat total = 0;
      QVec weights;
      for (std::size_t v = 0; v < dom.domain.vertices.size(); ++v) {
        Rat w = random_rat(rng, 1, 1, 16);
        weights.push_back(w);
        total += w;
      }
      for (std::size_t v = 0; v < dom.domain.vertices.size(); ++v) {
        x = add(x, scale(dom.domain.vertices[v], weights[v] / total));
      }
      check_point(x);
      ++rep.inside_checked;
    }
  }

  // Arbitrary simplex points, both sides of the membership test.
  for (unsigned i = 0; i < samples; ++i) {
    check_point(random_simplex_point(rng, p.k));
    ++rep.outside_checked;
  }

  // Toric models: recompute delta through the pair polytope, which pins
  // the scaling relation S_{X, sum x_j D_j}(r) = (1 - sum x_j) S_X(r).
  if (const auto* pm = std::get_if<PairModel>(&m)) {
    for (unsigned i = 0; i < std::min(samples, 8u); ++i) {
      QVec x = random_simplex_point(rng, p.k);
      Rat sigma = coeff_sum(x);
      if (sigma == 1 || !lc_holds(p, x, true)) continue;
      std::optional<Rat> direct;
      for (std::size_t r = 0; r < pm->base.rays.size(); ++r) {
        const QVec& ray = pm->base.rays[r];
        Rat s_pair = s_pair_direct(*pm, x, ray);
        Rat s_scaled = (Rat(1) - sigma) * p.rows[r].S;
        if (s_pair != s_scaled) {
          throw invariant_violation("scaling relation fails at " + point_str(x) +
                                    " on " + p.rows[r].label);
        }
        Rat a_pair = p.rows[r].A - dot(x, p.rows[r].ord);
        Rat ratio = a_pair / s_pair;
        if (!direct || ratio < *direct) direct = ratio;
      }
      DeltaReport via_rows = delta_at(p, x);
      if (direct && via_rows.delta && *direct != *via_rows.delta) {
        throw invariant_violation("delta routes disagree at " + point_str(x));
      }
      ++rep.scaling_checked;
    }
  }
  return rep;
}

}  // namespace kss
