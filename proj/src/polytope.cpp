#include "kss/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kss/lp.hpp"

namespace kss {

namespace {

void sort_halfspaces(std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end(),
            [](const Halfspace& a, const Halfspace& b) { return compare(a, b) < 0; });
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

// Enumerate vertices by exact solves of ambient-size facet subsets.
QMat enumerate_vertices(std::size_t ambient, const std::vector<Halfspace>& hs) {
  QMat verts;
  if (ambient == 0) {
    verts.push_back(QVec{});
    return verts;
  }
  std::size_t m = hs.size();
  std::vector<std::size_t> idx(ambient);
  auto feasible = [&](const QVec& x) {
    return std::all_of(hs.begin(), hs.end(),
                       [&](const Halfspace& h) { return h.contains(x); });
  };
  // Iterate over all ambient-subsets of constraint boundaries.
  std::vector<std::size_t> c(ambient);
  for (std::size_t i = 0; i < ambient; ++i) c[i] = i;
  if (m < ambient) return verts;
  for (;;) {
    QMat a;
    QVec b;
    for (std::size_t i : c) {
      a.push_back(hs[i].boundary.normal);
      b.push_back(hs[i].boundary.offset);
    }
    if (rank(a) == ambient) {
      auto x = solve_linear(a, b);
      if (x && feasible(*x)) verts.push_back(*x);
    }
    // next combination
    std::size_t i = ambient;
    while (i > 0 && c[i - 1] == m - ambient + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < ambient; ++j) c[j] = c[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end(),
            [](const QVec& a, const QVec& b) { return lex_compare(a, b) < 0; });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

int affine_dim(const QMat& verts) {
  if (verts.empty()) return -1;
  return static_cast<int>(affine_hull(verts).first);
}

}  // namespace

Polytope from_halfspaces(std::size_t ambient, std::vector<Halfspace> hs) {
  for (const Halfspace& h : hs) {
    if (h.boundary.normal.size() != ambient) {
      throw input_error("halfspace ambient dimension mismatch");
    }
  }
  sort_halfspaces(hs);

  Polytope p;
  p.ambient = ambient;

  QVec probe = zero_vec(ambient);
  if (lp_minimize(hs, probe).status == LpStatus::Infeasible) {
    p.halfspaces = std::move(hs);
    return p;  // empty polytope
  }
  for (std::size_t j = 0; j < ambient; ++j) {
    QVec e = zero_vec(ambient);
    e[j] = 1;
    if (lp_minimize(hs, e).status == LpStatus::Unbounded ||
        lp_maximize(hs, e).status == LpStatus::Unbounded) {
      throw unbounded_error("region is unbounded in coordinate " +
                            std::to_string(j + 1));
    }
  }

  // Drop halfspaces implied by the rest; order is canonical so the
  // retained representation is deterministic.
  for (std::size_t i = 0; i < hs.size();) {
    std::vector<Halfspace> rest;
    rest.reserve(hs.size() - 1);
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (j != i) rest.push_back(hs[j]);
    }
    auto [normal, offset] = hs[i].oriented();
    LpResult r = lp_minimize(rest, normal);
    if (r.status == LpStatus::Optimal && r.value >= offset) {
      hs.erase(hs.begin() + i);
    } else {
      ++i;
    }
  }

  p.halfspaces = std::move(hs);
  p.vertices = enumerate_vertices(ambient, p.halfspaces);
  p.dim = affine_dim(p.vertices);
  return p;
}

Polytope intersect(const Polytope& p, const std::vector<Halfspace>& extra) {
  std::vector<Halfspace> hs = p.halfspaces;
  hs.insert(hs.end(), extra.begin(), extra.end());
  return from_halfspaces(p.ambient, std::move(hs));
}

Polytope standard_simplex(std::size_t k) {
  std::vector<Halfspace> hs;
  for (std::size_t j = 0; j < k; ++j) {
    QVec e = zero_vec(k);
    e[j] = 1;
    hs.push_back(Halfspace::geq(std::move(e), Rat(0)));
  }
  if (k > 0) hs.push_back(Halfspace::geq(QVec(k, Rat(-1)), Rat(-1)));
  return from_halfspaces(k, std::move(hs));
}

namespace {

Rat simplex_volume(const QMat& simplex, std::size_t k) {
  if (k == 0) return Rat(1);
  QMat m;
  for (std::size_t i = 1; i <= k; ++i) m.push_back(sub(simplex[i], simplex[0]));
  // determinant by fraction-preserving elimination
  Rat det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = Rat(1) / m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      Rat f = m[r][col] * inv;
      for (std::size_t c2 = col; c2 < k; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  if (det < 0) det = -det;
  Int fact = 1;
  for (std::size_t i = 2; i <= k; ++i) fact *= i;
  return det / Rat(fact);
}

// Recursive fan triangulation over the face lattice. `verts` is the face's
// vertex set, `d` its affine dimension; facets of the face are cut out by
// the polytope's own halfspace boundaries.
void triangulate_face(const std::vector<Halfspace>& hs, const QMat& verts,
                      int d, bool root_last, std::vector<QMat>& out,
                      const QMat& apex_chain) {
  if (d == 0) {
    QMat simplex = apex_chain;
    simplex.push_back(verts[0]);
    out.push_back(std::move(simplex));
    return;
  }
  const QVec& root = root_last ? verts.back() : verts.front();
  std::set<QMat> seen;
  for (const Halfspace& h : hs) {
    QMat w;
    for (const QVec& v : verts) {
      if (h.boundary.eval(v) == 0) w.push_back(v);
    }
    if (w.empty() || w.size() == verts.size()) continue;
    if (std::find(w.begin(), w.end(), root) != w.end()) continue;
    if (affine_dim(w) != d - 1) continue;
    if (!seen.insert(w).second) continue;
    QMat chain = apex_chain;
    chain.push_back(root);
    triangulate_face(hs, w, d - 1, root_last, out, chain);
  }
}

}  // namespace

std::vector<QMat> triangulate(const Polytope& p, bool root_last) {
  std::vector<QMat> out;
  if (p.empty() || p.dim != static_cast<int>(p.ambient)) {
    throw degenerate_error("triangulation requires a full-dimensional polytope");
  }
  if (p.ambient == 0) {
    out.push_back(QMat{QVec{}});
    return out;
  }
  triangulate_face(p.halfspaces, p.vertices, p.dim, root_last, out, QMat{});
  return out;
}

Rat volume(const Polytope& p) {
  if (p.empty() || p.dim != static_cast<int>(p.ambient)) return Rat(0);
  Rat v = 0;
  for (const QMat& s : triangulate(p)) v += simplex_volume(s, p.ambient);
  return v;
}

QVec barycenter(const Polytope& p) {
  if (p.empty() || p.dim != static_cast<int>(p.ambient)) {
    throw degenerate_error("barycenter requires a full-dimensional polytope");
  }
  QVec acc = zero_vec(p.ambient);
  Rat total = 0;
  for (const QMat& s : triangulate(p)) {
    Rat v = simplex_volume(s, p.ambient);
    QVec centroid = zero_vec(p.ambient);
    for (const QVec& w : s) centroid = add(centroid, w);
    centroid = scale(centroid, Rat(1, Int(s.size())));
    acc = add(acc, scale(centroid, v));
    total += v;
  }
  return scale(acc, Rat(1) / total);
}

Rat integrate_linear(const Polytope& p, const QVec& form, const Rat& constant) {
  if (p.empty() || p.dim != static_cast<int>(p.ambient)) {
    throw degenerate_error("integration requires a full-dimensional polytope");
  }
  Rat total = 0;
  for (const QMat& s : triangulate(p)) {
    Rat v = simplex_volume(s, p.ambient);
    Rat mean = 0;
    for (const QVec& w : s) mean += dot(form, w);
    mean /= Rat(Int(s.size()));
    total += v * (mean + constant);
  }
  return total;
}

LinOpt minimize_linear(const Polytope& p, const QVec& form) {
  if (p.empty()) throw degenerate_error("minimize_linear on empty polytope");
  Rat best = dot(form, p.vertices[0]);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    Rat v = dot(form, p.vertices[i]);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  if (p.ambient > 0) {
    LpResult lp = lp_minimize(p.halfspaces, form);
    if (lp.status != LpStatus::Optimal || lp.value != best) {
      throw invariant_violation("LP and vertex scan disagree on minimum of " +
                                [&] {
                                  std::string s;
                                  for (const Rat& x : form) s += rat_to_string(x) + " ";
                                  return s;
                                }());
    }
  }
  return {best, p.vertices[arg]};
}

LinOpt maximize_linear(const Polytope& p, const QVec& form) {
  LinOpt r = minimize_linear(p, scale(form, Rat(-1)));
  r.value = -r.value;
  return r;
}

bool separates(const Hyperplane& h, const Polytope& p) {
  bool pos = false, neg = false;
  for (const QVec& v : p.vertices) {
    int s = sign(h.eval(v));
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  return pos && neg;
}

bool contains(const Polytope& p, const QVec& x) {
  if (p.empty()) return false;
  return std::all_of(p.halfspaces.begin(), p.halfspaces.end(),
                     [&](const Halfspace& h) { return h.contains(x); });
}

bool equal(const Polytope& p, const Polytope& q) {
  if (p.ambient != q.ambient) return false;
  if (p.empty() || q.empty()) return p.empty() && q.empty();
  return std::all_of(p.vertices.begin(), p.vertices.end(),
                     [&](const QVec& v) { return contains(q, v); }) &&
         std::all_of(q.vertices.begin(), q.vertices.end(),
                     [&](const QVec& v) { return contains(p, v); });
}

std::vector<Polytope> faces(const Polytope& p, int dim) {
  std::vector<Polytope> out;
  if (p.empty() || dim < 0 || dim > p.dim) return out;
  if (dim == p.dim) {
    out.push_back(p);
    return out;
  }
  // Close the vertex sets under refinement by single boundaries; this
  // walks the whole face lattice below p.
  std::set<QMat> all;
  std::set<QMat> frontier{p.vertices};
  while (!frontier.empty()) {
    std::set<QMat> next;
    for (const QMat& face : frontier) {
      for (const Halfspace& h : p.halfspaces) {
        QMat w;
        for (const QVec& v : face) {
          if (h.boundary.eval(v) == 0) w.push_back(v);
        }
        if (w.empty() || w.size() == face.size()) continue;
        if (all.insert(w).second) next.insert(w);
      }
    }
    frontier = std::move(next);
  }
  for (const QMat& w : all) {
    if (affine_dim(w) != dim) continue;
    std::vector<Halfspace> hs = p.halfspaces;
    for (const Halfspace& h : p.halfspaces) {
      bool tight = std::all_of(w.begin(), w.end(), [&](const QVec& v) {
        return h.boundary.eval(v) == 0;
      });
      if (tight) {
        hs.push_back(Halfspace{h.boundary, -h.side});
      }
    }
    out.push_back(from_halfspaces(p.ambient, std::move(hs)));
  }
  std::sort(out.begin(), out.end(), [](const Polytope& a, const Polytope& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace kss
