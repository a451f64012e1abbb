#pragma once

// Rational polyhedral cones, polyhedra and fans with exact arithmetic.
// Both representations are kept in canonical form: rays are primitive and
// orthogonal to the lineality space, lineality and equations are reduced
// echelon bases, facet normals are primitive and orthogonal to the
// equations. Two cones are equal iff their canonical data agree.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acx/lattice.hpp"

namespace acx {

class PolyhedralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct DDRay {
  IntVec v;
  boost::dynamic_bitset<> tight;
};

struct DDOutput {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

inline bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline IntVec reduce_content(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// a * x + b * y with the content removed
inline IntVec combine(const Int& a, const IntVec& x, const Int& b, const IntVec& y) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return reduce_content(std::move(r));
}

// Move v into the hyperplane a = 0 along p (where a.p != 0), keeping it on
// the same side modulo p.
inline IntVec project_along(const IntVec& v, const Int& av, const IntVec& p, const Int& ap) {
  Int absap = abs(ap);
  Int k = ap > 0 ? Int(-av) : Int(av);
  return combine(absap, v, k, p);
}

inline std::vector<DDRay> split_and_combine(std::vector<DDRay>& rays, const IntVec& a,
                                            std::optional<std::size_t> mark, bool keep_positive) {
  std::vector<std::size_t> pos, neg;
  std::vector<Int> val(rays.size());
  std::vector<DDRay> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    val[i] = dot(a, rays[i].v);
    if (val[i] > 0)
      pos.push_back(i);
    else if (val[i] < 0)
      neg.push_back(i);
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (val[i] == 0) {
      DDRay r = rays[i];
      if (mark) r.tight.set(*mark);
      out.push_back(std::move(r));
    } else if (val[i] > 0 && keep_positive) {
      out.push_back(rays[i]);
    }
  }
  for (auto p : pos)
    for (auto n : neg) {
      boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
      bool adjacent = true;
      for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
        if (w == p || w == n) continue;
        if (common.is_subset_of(rays[w].tight)) adjacent = false;
      }
      if (!adjacent) continue;
      DDRay r{combine(val[p], rays[n].v, Int(-val[n]), rays[p].v), common};
      if (mark) r.tight.set(*mark);
      out.push_back(std::move(r));
    }
  return out;
}

/// Generators of {x : ineqs.x >= 0, eqs.x = 0} by the double description
/// method, starting from the whole space as lineality.
inline DDOutput double_description(std::size_t dim, const std::vector<IntVec>& ineqs,
                                   const std::vector<IntVec>& eqs) {
  for (const auto& a : ineqs)
    if (a.size() != dim) throw PolyhedralError("constraint has wrong dimension");
  for (const auto& a : eqs)
    if (a.size() != dim) throw PolyhedralError("constraint has wrong dimension");
  const std::size_t K = ineqs.size();
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, Int(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<DDRay> rays;

  auto find_pivot = [&](const IntVec& a) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) return i;
    return std::nullopt;
  };

  auto pivot_out = [&](const IntVec& a, std::size_t k) {
    IntVec p = lin[k];
    Int ap = dot(a, p);
    lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(k));
    for (auto& l : lin) {
      Int al = dot(a, l);
      if (al != 0) l = project_along(l, al, p, ap);
    }
    for (auto& r : rays) {
      Int ar = dot(a, r.v);
      if (ar != 0) r.v = project_along(r.v, ar, p, ap);
    }
    if (ap < 0)
      for (auto& x : p) x = -x;
    return p;
  };

  for (const auto& a : eqs) {
    if (is_zero_vec(a)) continue;
    if (auto k = find_pivot(a)) {
      pivot_out(a, *k);
    } else {
      rays = split_and_combine(rays, a, std::nullopt, false);
    }
  }
  for (std::size_t idx = 0; idx < K; ++idx) {
    const IntVec& a = ineqs[idx];
    if (is_zero_vec(a)) {
      for (auto& r : rays) r.tight.set(idx);
      continue;
    }
    if (auto k = find_pivot(a)) {
      IntVec p = pivot_out(a, *k);
      for (auto& r : rays) r.tight.set(idx);
      boost::dynamic_bitset<> t(K);
      for (std::size_t j = 0; j < idx; ++j) t.set(j);
      rays.push_back(DDRay{std::move(p), std::move(t)});
    } else {
      rays = split_and_combine(rays, a, idx, true);
    }
  }
  DDOutput out;
  for (auto& r : rays) out.rays.push_back(reduce_content(std::move(r.v)));
  out.lineality = std::move(lin);
  return out;
}

/// Orthogonal projection of v onto the complement of span(basis), scaled to
/// a primitive integer vector. Returns nullopt if v lies in the span.
inline std::optional<IntVec> project_off(const IntVec& v, const std::vector<IntVec>& basis) {
  if (basis.empty()) {
    if (is_zero_vec(v)) return std::nullopt;
    return make_primitive(v).first;
  }
  const std::size_t k = basis.size();
  RatMatrix G(k, k);
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) G(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto sol = solve_rational(G, rhs);
  RatVec w = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[j] -= sol->particular[i] * basis[i][j];
  if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; })) return std::nullopt;
  return primitive_on_ray(w);
}

inline std::vector<IntVec> canonical_rays(const std::vector<IntVec>& rays, const std::vector<IntVec>& lin) {
  std::set<IntVec> s;
  for (const auto& r : rays)
    if (auto p = project_off(r, lin)) s.insert(*p);
  return {s.begin(), s.end()};
}

}  // namespace detail

class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t dim, const std::vector<IntVec>& rays,
                              const std::vector<IntVec>& lineality = {}) {
    for (const auto& r : rays)
      if (r.size() != dim) throw PolyhedralError("generator has wrong dimension");
    for (const auto& r : lineality)
      if (r.size() != dim) throw PolyhedralError("generator has wrong dimension");
    detail::DDOutput h = detail::double_description(dim, rays, lineality);
    return from_facets_unchecked(dim, h.rays, h.lineality);
  }

  static Cone from_rational_generators(std::size_t dim, const std::vector<RatVec>& rays) {
    std::vector<IntVec> ir;
    for (const auto& r : rays) {
      if (std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; })) continue;
      ir.push_back(primitive_on_ray(r));
    }
    return from_generators(dim, ir);
  }

  /// {x : a.x >= 0 for a in ineqs, e.x = 0 for e in eqs}
  static Cone from_inequalities(std::size_t dim, const std::vector<IntVec>& ineqs,
                                const std::vector<IntVec>& eqs = {}) {
    detail::DDOutput v = detail::double_description(dim, ineqs, eqs);
    return from_generators(dim, v.rays, v.lineality);
  }

  static Cone whole_space(std::size_t dim) { return from_inequalities(dim, {}, {}); }

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<IntVec>& rays() const noexcept { return rays_; }
  const std::vector<IntVec>& lineality() const noexcept { return lineality_; }
  const std::vector<IntVec>& facets() const noexcept { return facets_; }
  const std::vector<IntVec>& equations() const noexcept { return equations_; }

  std::size_t dimension() const { return dim_ - equations_.size(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }

  bool contains(const IntVec& x) const {
    if (x.size() != dim_) throw PolyhedralError("point has wrong dimension");
    for (const auto& e : equations_)
      if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
      if (dot(f, x) < 0) return false;
    return true;
  }

  bool contains(const RatVec& x) const {
    if (x.size() != dim_) throw PolyhedralError("point has wrong dimension");
    for (const auto& e : equations_)
      if (dot(x, e) != 0) return false;
    for (const auto& f : facets_)
      if (dot(x, f) < 0) return false;
    return true;
  }

  bool contains(const Cone& o) const {
    for (const auto& r : o.rays_)
      if (!contains(r)) return false;
    for (const auto& l : o.lineality_) {
      if (!contains(l)) return false;
      IntVec m = l;
      for (auto& x : m) x = -x;
      if (!contains(m)) return false;
    }
    return true;
  }

  bool in_relative_interior(const RatVec& x) const {
    if (x.size() != dim_) throw PolyhedralError("point has wrong dimension");
    for (const auto& e : equations_)
      if (dot(x, e) != 0) return false;
    for (const auto& f : facets_)
      if (dot(x, f) <= 0) return false;
    return true;
  }

  Cone dual() const { return from_generators(dim_, facets_, equations_); }

  Cone intersect(const Cone& o) const {
    if (o.dim_ != dim_) throw PolyhedralError("intersecting cones of different ambient dimension");
    std::vector<IntVec> in = facets_, eq = equations_;
    in.insert(in.end(), o.facets_.begin(), o.facets_.end());
    eq.insert(eq.end(), o.equations_.begin(), o.equations_.end());
    return from_inequalities(dim_, in, eq);
  }

  bool operator==(const Cone& o) const {
    return dim_ == o.dim_ && rays_ == o.rays_ && lineality_ == o.lineality_;
  }
  bool operator!=(const Cone& o) const { return !(*this == o); }

 private:
  // Build from a (possibly redundant) H-description given as the rays and
  // lineality of the dual cone.
  static Cone from_facets_unchecked(std::size_t dim, const std::vector<IntVec>& dual_rays,
                                    const std::vector<IntVec>& dual_lin) {
    Cone c;
    c.dim_ = dim;
    detail::DDOutput v = detail::double_description(dim, dual_rays, dual_lin);
    c.lineality_ = canonical_row_basis(v.lineality, dim);
    c.rays_ = detail::canonical_rays(v.rays, c.lineality_);
    // irredundant facets come from the dual of the canonical generators
    detail::DDOutput h = detail::double_description(dim, c.rays_, c.lineality_);
    c.equations_ = canonical_row_basis(h.lineality, dim);
    c.facets_ = detail::canonical_rays(h.rays, c.equations_);
    return c;
  }

  std::size_t dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
};

inline Cone dual_cone(const Cone& c) { return c.dual(); }

/// Is f a face of c? Requires f to be contained in c.
inline bool is_face(const Cone& f, const Cone& c) {
  if (!c.contains(f)) throw PolyhedralError("face test on a cone that is not contained in the other");
  std::vector<const IntVec*> tight;
  for (const auto& a : c.facets()) {
    bool t = true;
    for (const auto& g : f.rays())
      if (dot(a, g) != 0) {
        t = false;
        break;
      }
    for (const auto& g : f.lineality())
      if (t && dot(a, g) != 0) t = false;
    if (t) tight.push_back(&a);
  }
  for (const auto& r : c.rays()) {
    bool on_face = std::all_of(tight.begin(), tight.end(), [&](const IntVec* a) { return dot(*a, r) == 0; });
    if (on_face && !f.contains(r)) return false;
  }
  for (const auto& l : c.lineality()) {
    IntVec m = l;
    for (auto& x : m) x = -x;
    if (!f.contains(l) || !f.contains(m)) return false;
  }
  return true;
}

/// Smallest face of cone(gens) containing the generators indexed by subset,
/// returned as the set of indices of generators lying in it.
inline std::vector<std::size_t> face_closure(const Cone& c, const std::vector<IntVec>& gens,
                                             const std::vector<std::size_t>& subset) {
  std::vector<const IntVec*> tight;
  for (const auto& a : c.facets())
    if (std::all_of(subset.begin(), subset.end(), [&](std::size_t i) { return dot(a, gens[i]) == 0; }))
      tight.push_back(&a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (std::all_of(tight.begin(), tight.end(), [&](const IntVec* a) { return dot(*a, gens[i]) == 0; }))
      out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

/// a.x >= b, or a.x = b when used as an equation.
struct Halfspace {
  IntVec a;
  Int b;
};

class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_inequalities(std::size_t dim, const std::vector<Halfspace>& ineqs,
                                      const std::vector<Halfspace>& eqs = {}) {
    std::vector<IntVec> hi, he;
    for (const auto& h : ineqs) hi.push_back(homogenize(dim, h));
    for (const auto& h : eqs) he.push_back(homogenize(dim, h));
    IntVec t(dim + 1, Int(0));
    t[dim] = 1;
    hi.push_back(t);
    return from_cone(dim, Cone::from_inequalities(dim + 1, hi, he));
  }

  static Polyhedron from_points(std::size_t dim, const std::vector<RatVec>& points,
                                const std::vector<IntVec>& rays = {}, const std::vector<IntVec>& lineality = {}) {
    if (points.empty()) return empty(dim);
    std::vector<IntVec> g, l;
    for (const auto& p : points) {
      if (p.size() != dim) throw PolyhedralError("point has wrong dimension");
      Int den = 1;
      for (const auto& x : p) den = lcm(den, x.get_den());
      IntVec h(dim + 1);
      for (std::size_t i = 0; i < dim; ++i) {
        Rat s = p[i] * den;
        h[i] = s.get_num();
      }
      h[dim] = den;
      g.push_back(std::move(h));
    }
    for (const auto& r : rays) {
      IntVec h = r;
      h.push_back(0);
      g.push_back(std::move(h));
    }
    for (const auto& r : lineality) {
      IntVec h = r;
      h.push_back(0);
      l.push_back(std::move(h));
    }
    return from_cone(dim, Cone::from_generators(dim + 1, g, l));
  }

  static Polyhedron from_points(std::size_t dim, const std::vector<IntVec>& points) {
    std::vector<RatVec> q;
    for (const auto& p : points) q.push_back(to_rational(p));
    return from_points(dim, q);
  }

  static Polyhedron empty(std::size_t dim) {
    Polyhedron p;
    p.dim_ = dim;
    p.hom_ = Cone::from_generators(dim + 1, std::vector<IntVec>{});
    return p;
  }

  static Polyhedron from_cone(std::size_t dim, const Cone& hom) {
    Polyhedron p;
    p.dim_ = dim;
    bool any = std::any_of(hom.rays().begin(), hom.rays().end(), [&](const IntVec& r) { return r[dim] > 0; });
    if (!any) return empty(dim);
    p.hom_ = hom;
    return p;
  }

  std::size_t ambient_dim() const noexcept { return dim_; }
  const Cone& homogenization() const noexcept { return hom_; }

  bool is_empty() const {
    return std::none_of(hom_.rays().begin(), hom_.rays().end(), [&](const IntVec& r) { return r[dim_] > 0; });
  }
  bool is_bounded() const { return rays().empty() && lineality().empty(); }

  std::vector<RatVec> vertices() const {
    std::vector<RatVec> out;
    for (const auto& r : hom_.rays()) {
      if (r[dim_] <= 0) continue;
      RatVec v(dim_);
      for (std::size_t i = 0; i < dim_; ++i) v[i] = make_rat(r[i], r[dim_]);
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<IntVec> rays() const {
    std::vector<IntVec> out;
    for (const auto& r : hom_.rays())
      if (r[dim_] == 0) out.emplace_back(r.begin(), r.end() - 1);
    return out;
  }

  std::vector<IntVec> lineality() const {
    std::vector<IntVec> out;
    for (const auto& r : hom_.lineality()) out.emplace_back(r.begin(), r.end() - 1);
    return out;
  }

  std::vector<Halfspace> inequalities() const {
    std::vector<Halfspace> out;
    if (is_empty()) return {Halfspace{IntVec(dim_, Int(0)), Int(1)}};
    for (const auto& f : hom_.facets()) {
      IntVec a(f.begin(), f.end() - 1);
      if (detail::is_zero_vec(a)) continue;
      out.push_back(Halfspace{std::move(a), Int(-f[dim_])});
    }
    return out;
  }

  std::vector<Halfspace> equations() const {
    std::vector<Halfspace> out;
    for (const auto& f : hom_.equations()) {
      IntVec a(f.begin(), f.end() - 1);
      out.push_back(Halfspace{std::move(a), Int(-f[dim_])});
    }
    return out;
  }

  std::size_t dimension() const {
    if (is_empty()) throw PolyhedralError("dimension of an empty polyhedron");
    return hom_.dimension() - 1;
  }

  bool contains(const RatVec& x) const {
    if (x.size() != dim_) throw PolyhedralError("point has wrong dimension");
    if (is_empty()) return false;
    RatVec h = x;
    h.push_back(1);
    return hom_.contains(h);
  }
  bool contains(const IntVec& x) const { return contains(to_rational(x)); }

  bool operator==(const Polyhedron& o) const {
    if (dim_ != o.dim_) return false;
    if (is_empty() || o.is_empty()) return is_empty() && o.is_empty();
    return hom_ == o.hom_;
  }
  bool operator!=(const Polyhedron& o) const { return !(*this == o); }

 private:
  static IntVec homogenize(std::size_t dim, const Halfspace& h) {
    if (h.a.size() != dim) throw PolyhedralError("constraint has wrong dimension");
    IntVec v = h.a;
    v.push_back(-h.b);
    return v;
  }

  std::size_t dim_ = 0;
  Cone hom_;
};

inline Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw PolyhedralError("dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.ambient_dim());
  auto in = p.inequalities();
  auto eq = p.equations();
  for (auto& h : q.inequalities()) in.push_back(h);
  for (auto& h : q.equations()) eq.push_back(h);
  return Polyhedron::from_inequalities(p.ambient_dim(), in, eq);
}

inline Polyhedron intersect(const Polyhedron& p, const Cone& c) {
  if (p.ambient_dim() != c.ambient_dim()) throw PolyhedralError("dimension mismatch");
  if (p.is_empty()) return p;
  auto in = p.inequalities();
  auto eq = p.equations();
  for (const auto& f : c.facets()) in.push_back(Halfspace{f, Int(0)});
  for (const auto& f : c.equations()) eq.push_back(Halfspace{f, Int(0)});
  return Polyhedron::from_inequalities(p.ambient_dim(), in, eq);
}

inline Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw PolyhedralError("dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.ambient_dim());
  std::vector<RatVec> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVec s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  auto rays = p.rays();
  for (auto& r : q.rays()) rays.push_back(r);
  auto lin = p.lineality();
  for (auto& r : q.lineality()) lin.push_back(r);
  return Polyhedron::from_points(p.ambient_dim(), pts, rays, lin);
}

/// {u : <u,v> >= -1 for all v in p}
inline Polyhedron dual_polyhedron(const Polyhedron& p) {
  const std::size_t d = p.ambient_dim();
  if (p.is_empty()) return Polyhedron::from_inequalities(d, {});
  std::vector<Halfspace> in, eq;
  for (const auto& v : p.vertices()) {
    Int den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    IntVec a(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rat s = v[i] * den;
      a[i] = s.get_num();
    }
    in.push_back(Halfspace{std::move(a), Int(-den)});
  }
  for (const auto& r : p.rays()) in.push_back(Halfspace{r, Int(0)});
  for (const auto& l : p.lineality()) eq.push_back(Halfspace{l, Int(0)});
  return Polyhedron::from_inequalities(d, in, eq);
}

/// All lattice points of a bounded polyhedron, sorted.
inline std::vector<IntVec> lattice_points(const Polyhedron& p) {
  if (p.is_empty()) return {};
  if (!p.is_bounded()) throw PolyhedralError("lattice enumeration requires bounded polyhedron");
  const std::size_t d = p.ambient_dim();
  auto verts = p.vertices();
  IntVec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rat mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return {};
  }
  auto ineqs = p.inequalities();
  auto eqs = p.equations();
  std::vector<IntVec> out;
  IntVec x = lo;
  for (;;) {
    bool ok = true;
    for (const auto& e : eqs)
      if (dot(e.a, x) != e.b) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& h : ineqs)
        if (dot(h.a, x) < h.b) {
          ok = false;
          break;
        }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < d) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t affine_dimension(const std::vector<RatVec>& pts) {
  if (pts.empty()) throw PolyhedralError("affine dimension of an empty set");
  if (pts.size() == 1) return 0;
  RatMatrix m(pts.size() - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].size(); ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
  return rank(m);
}

/// Vertex sets of the k-dimensional faces of a polytope.
inline std::vector<std::vector<RatVec>> polytope_faces(const Polyhedron& p, std::size_t k) {
  if (!p.is_bounded()) throw PolyhedralError("face lattice requested for an unbounded polyhedron");
  if (p.is_empty()) return {};
  auto verts = p.vertices();
  auto ineqs = p.inequalities();
  std::vector<boost::dynamic_bitset<>> facet_sets;
  for (const auto& h : ineqs) {
    boost::dynamic_bitset<> s(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(verts[i], h.a) == h.b) s.set(i);
    facet_sets.push_back(std::move(s));
  }
  std::set<boost::dynamic_bitset<>> seen;
  std::vector<boost::dynamic_bitset<>> stack;
  boost::dynamic_bitset<> all(verts.size());
  all.set();
  seen.insert(all);
  stack.push_back(all);
  while (!stack.empty()) {
    auto f = stack.back();
    stack.pop_back();
    for (const auto& g : facet_sets) {
      auto h = f & g;
      if (h.none() || h == f) continue;
      if (seen.insert(h).second) stack.push_back(h);
    }
  }
  std::vector<std::vector<RatVec>> out;
  for (const auto& s : seen) {
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (s.test(i)) pts.push_back(verts[i]);
    if (affine_dimension(pts) == k) out.push_back(std::move(pts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

/// A fan given by its rays and maximal cones (as sets of ray indices).
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> maximal;

  Cone cone(const std::vector<std::size_t>& idx) const {
    std::vector<IntVec> g;
    for (auto i : idx) g.push_back(rays.at(i));
    return Cone::from_generators(dim, g);
  }
  Cone cone(std::size_t i) const { return cone(maximal.at(i)); }

  /// Ray index sets of all faces of the i-th maximal cone (including the
  /// zero cone and the cone itself).
  std::vector<std::vector<std::size_t>> faces_of(std::size_t i) const {
    const auto& idx = maximal.at(i);
    Cone c = cone(i);
    std::vector<IntVec> g;
    for (auto j : idx) g.push_back(rays[j]);
    std::set<std::vector<std::size_t>> out;
    const std::size_t n = idx.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) sub.push_back(j);
      if (face_closure(c, g, sub) != sub) continue;
      std::vector<std::size_t> glob;
      for (auto j : sub) glob.push_back(idx[j]);
      std::sort(glob.begin(), glob.end());
      out.insert(glob);
    }
    return {out.begin(), out.end()};
  }

  /// Ray index sets of all cones of the fan.
  std::vector<std::vector<std::size_t>> all_cones() const {
    std::set<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < maximal.size(); ++i)
      for (auto& f : faces_of(i)) out.insert(f);
    return {out.begin(), out.end()};
  }

  /// Nonempty message if the cones do not form a fan.
  std::optional<std::string> check() const {
    std::vector<Cone> cs;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      cs.push_back(cone(i));
      if (!cs.back().is_pointed()) return "cone " + std::to_string(i) + " is not pointed";
      for (auto j : maximal[i]) {
        Cone c = cs.back();
        if (!is_face(Cone::from_generators(dim, {rays[j]}), c))
          return "generator " + std::to_string(j) + " is not a ray of cone " + std::to_string(i);
      }
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        Cone m = cs[i].intersect(cs[j]);
        if (!is_face(m, cs[i]) || !is_face(m, cs[j]))
          return "cones " + std::to_string(i) + " and " + std::to_string(j) + " meet outside a common face";
      }
    return std::nullopt;
  }

  bool is_complete() const {
    std::vector<Cone> cs;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      cs.push_back(cone(i));
      if (!cs.back().is_full_dimensional()) return false;
    }
    if (cs.empty()) return dim == 0;
    // every facet of every maximal cone must be shared with another one
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (const auto& f : cs[i].facets()) {
        std::vector<IntVec> g;
        for (const auto& r : cs[i].rays())
          if (dot(f, r) == 0) g.push_back(r);
        Cone facet = Cone::from_generators(dim, g);
        bool shared = false;
        for (std::size_t j = 0; j < cs.size() && !shared; ++j)
          if (j != i && cs[j].contains(facet) && cs[j].dimension() == dim) {
            Cone m = cs[j].intersect(cs[i]);
            shared = m == facet;
          }
        if (!shared) return false;
      }
    return true;
  }
};

}  // namespace acx
