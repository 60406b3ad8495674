#include "kss/toric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace kss {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return denominator(x) == 1; });
}

bool is_primitive(const QVec& ray) {
  Int g = 0;
  for (const Rat& x : ray) g = gcd(g, numerator(x));
  return g == 1;
}

}  // namespace

std::string ray_label(const QVec& ray) {
  std::string s = "ray(";
  for (std::size_t i = 0; i < ray.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(ray[i]);
  }
  return s + ")";
}

PairModel validate_model(std::string name, const QMat& rays,
                         const std::vector<ToricDivisorInput>& divisors) {
  if (rays.empty()) throw validation_error("NOT_FANO", "no fan rays given");
  std::size_t d = rays[0].size();
  if (d == 0) throw validation_error("NOT_FANO", "ambient dimension is zero");

  for (const QVec& r : rays) {
    if (r.size() != d) throw input_error("rays of mixed dimension");
    if (!is_integral(r) || is_zero(r)) {
      throw validation_error("NON_PRIMITIVE_RAY",
                             "ray " + ray_label(r) + " is not a nonzero integer vector");
    }
    if (!is_primitive(r)) {
      throw validation_error("NON_PRIMITIVE_RAY",
                             "ray " + ray_label(r) + " has entry gcd > 1");
    }
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (rays[i] == rays[j]) {
        throw validation_error("NOT_FANO", "duplicate ray " + ray_label(rays[i]));
      }
    }
  }

  ToricFanoModel base;
  base.d = d;
  base.rays = rays;

  std::vector<Halfspace> hs;
  for (const QVec& r : rays) hs.push_back(Halfspace::geq(r, Rat(-1)));
  try {
    base.anticanonical = from_halfspaces(d, hs);
  } catch (const unbounded_error&) {
    throw validation_error("NOT_FANO",
                           "rays do not positively span; anticanonical polytope unbounded");
  }
  const Polytope& P = base.anticanonical;

  // Every ray must cut a facet of P, otherwise the input is not the fan of
  // a Fano variety with these rays.
  for (const QVec& r : rays) {
    Halfspace h = Halfspace::geq(r, Rat(-1));
    if (std::find(P.halfspaces.begin(), P.halfspaces.end(), h) == P.halfspaces.end()) {
      throw validation_error("NOT_FANO",
                             ray_label(r) + " supports no facet of the anticanonical polytope");
    }
  }

  for (const QVec& v : P.vertices) {
    MaximalCone cone;
    cone.vertex = v;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (dot(v, rays[i]) == -1) cone.ray_indices.push_back(i);
    }
    if (cone.ray_indices.size() != d) {
      throw validation_error("NON_SIMPLICIAL_CONE",
                             "vertex of the anticanonical polytope lies on " +
                                 std::to_string(cone.ray_indices.size()) +
                                 " facets, expected " + std::to_string(d));
    }
    base.cones.push_back(std::move(cone));
  }

  Rat vol = volume(P);
  Int fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= i;
  base.degree = vol * Rat(fact);

  PairModel pm;
  pm.name = std::move(name);
  pm.base = std::move(base);

  for (const ToricDivisorInput& in : divisors) {
    if (in.coeffs.size() != rays.size()) {
      throw input_error("divisor '" + in.name + "' needs one coefficient per ray");
    }
    for (const Rat& a : in.coeffs) {
      if (a < 0) {
        throw validation_error("NOT_EFFECTIVE",
                               "divisor '" + in.name + "' has a negative coefficient");
      }
    }
    QVec rhs;
    for (std::size_t i = 0; i < rays.size(); ++i) rhs.push_back(in.coeffs[i] - 1);
    auto witness = solve_linear(rays, rhs);
    if (witness) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (dot(*witness, rays[i]) != rhs[i]) {
          witness.reset();
          break;
        }
      }
    }
    if (!witness) {
      throw validation_error("NOT_ANTICANONICAL",
                             "divisor '" + in.name +
                                 "' is not linearly equivalent to the anticanonical divisor");
    }
    Int idx = 1;
    for (const Rat& x : *witness) idx = lcm(idx, denominator(x));
    for (const Rat& a : in.coeffs) idx = lcm(idx, denominator(a));
    pm.divisors.push_back(ToricDivisor{in.name, in.coeffs, *witness, idx});
  }
  return pm;
}

ConePoint find_cone(const ToricFanoModel& m, const QVec& u) {
  if (u.size() != m.d) throw input_error("lattice vector of wrong dimension");
  if (is_zero(u)) throw degenerate_error("toric valuation requires u != 0");
  for (std::size_t c = 0; c < m.cones.size(); ++c) {
    const MaximalCone& cone = m.cones[c];
    QMat a(m.d, zero_vec(m.d));
    for (std::size_t col = 0; col < m.d; ++col) {
      for (std::size_t row = 0; row < m.d; ++row) {
        a[row][col] = m.rays[cone.ray_indices[col]][row];
      }
    }
    auto lambda = solve_linear(a, u);
    if (!lambda) continue;
    if (std::all_of(lambda->begin(), lambda->end(),
                    [](const Rat& x) { return x >= 0; })) {
      return {c, *lambda};
    }
  }
  throw invariant_violation("fan is not complete: no cone contains the vector");
}

Rat log_discrepancy(const ToricFanoModel& m, const QVec& u) {
  ConePoint cp = find_cone(m, u);
  Rat lambda_sum = 0;
  for (const Rat& l : cp.lambda) lambda_sum += l;
  Rat dual = -dot(u, m.cones[cp.cone].vertex);
  if (lambda_sum != dual) {
    throw invariant_violation("log discrepancy routes disagree at " + ray_label(u));
  }
  return lambda_sum;
}

Rat div_order(const ToricFanoModel& m, const ToricDivisor& div, const QVec& u) {
  ConePoint cp = find_cone(m, u);
  Rat s = 0;
  for (std::size_t i = 0; i < cp.lambda.size(); ++i) {
    s += cp.lambda[i] * div.coeffs[m.cones[cp.cone].ray_indices[i]];
  }
  return s;
}

Rat s_invariant(const ToricFanoModel& m, const QVec& u) {
  if (is_zero(u)) throw degenerate_error("toric valuation requires u != 0");
  QVec bary = barycenter(m.anticanonical);
  return dot(u, bary) - minimize_linear(m.anticanonical, u).value;
}

Rat t_invariant(const ToricFanoModel& m, const QVec& u) {
  if (is_zero(u)) throw degenerate_error("toric valuation requires u != 0");
  return maximize_linear(m.anticanonical, u).value -
         minimize_linear(m.anticanonical, u).value;
}

QMat dilated_lattice_points(const ToricFanoModel& m, unsigned t) {
  const Polytope& P = m.anticanonical;
  std::vector<Int> lo(m.d), hi(m.d);
  for (std::size_t j = 0; j < m.d; ++j) {
    Rat mn = P.vertices[0][j], mx = P.vertices[0][j];
    for (const QVec& v : P.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = rat_ceil(mn * t);
    hi[j] = rat_floor(mx * t);
  }
  QMat points;
  QVec y(m.d, Rat(0));
  Rat bound = -Rat(Int(t));
  auto inside = [&](const QVec& p) {
    return std::all_of(m.rays.begin(), m.rays.end(),
                       [&](const QVec& r) { return dot(p, r) >= bound; });
  };
  // box scan
  std::vector<Int> cur(lo);
  for (;;) {
    for (std::size_t j = 0; j < m.d; ++j) y[j] = Rat(cur[j]);
    if (inside(y)) points.push_back(y);
    std::size_t j = 0;
    while (j < m.d) {
      if (cur[j] < hi[j]) {
        ++cur[j];
        break;
      }
      cur[j] = lo[j];
      ++j;
    }
    if (j == m.d) break;
  }
  std::sort(points.begin(), points.end(),
            [](const QVec& a, const QVec& b) { return lex_compare(a, b) < 0; });
  return points;
}

Rat s_m_invariant(const ToricFanoModel& m, const QVec& u, unsigned dilation) {
  if (is_zero(u)) throw degenerate_error("toric valuation requires u != 0");
  if (dilation == 0) throw input_error("dilation must be positive");
  QMat pts = dilated_lattice_points(m, dilation);
  Rat min_p = minimize_linear(m.anticanonical, u).value;
  Rat sum = 0;
  for (const QVec& y : pts) sum += dot(u, y) - Rat(Int(dilation)) * min_p;
  return sum / (Rat(Int(dilation)) * Rat(Int(pts.size())));
}

Rat s_pair_direct(const PairModel& pm, const QVec& x, const QVec& u) {
  if (x.size() != pm.k()) throw input_error("coefficient vector of wrong length");
  const ToricFanoModel& base = pm.base;
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < base.rays.size(); ++i) {
    Rat level = 1;
    for (std::size_t j = 0; j < pm.divisors.size(); ++j) {
      level -= x[j] * pm.divisors[j].coeffs[i];
    }
    hs.push_back(Halfspace::geq(base.rays[i], -level));
  }
  Polytope pair_polytope = from_halfspaces(base.d, std::move(hs));
  if (pair_polytope.dim != static_cast<int>(base.d)) {
    throw degenerate_error("pair polytope is not full-dimensional");
  }
  return dot(u, barycenter(pair_polytope)) -
         minimize_linear(pair_polytope, u).value;
}

}  // namespace kss
