#pragma once

// Tropical structure, P-elementary cones, the weakly tropical refinement and
// the anticanonical complex with its lattice-point singularity tests.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "acx/arrangement.hpp"
#include "acx/lattice.hpp"
#include "acx/polyhedral.hpp"

namespace acx {

class NotQGorensteinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// trop(X) = (c-skeleton of the fan of P_r) x Q^s

struct Leaf {
  std::vector<int> I;
  Cone cone;
};

struct TropStructure {
  int c = 0, r = 0, s = 0;
  std::vector<Leaf> leaves;  // all I with 1 <= |I| <= c, ordered by size then lexicographically
  Cone lineality_space;

  std::vector<const Leaf*> maximal_leaves() const {
    std::vector<const Leaf*> out;
    for (const auto& l : leaves)
      if (l.I.size() == static_cast<std::size_t>(c)) out.push_back(&l);
    return out;
  }
};

/// e_0 = -(e_1 + ... + e_r), e_1..e_r standard, inside Q^{r+s}.
inline IntVec trop_generator(int i, int r, int s) {
  IntVec e(static_cast<std::size_t>(r + s), Int(0));
  if (i == 0)
    for (int k = 0; k < r; ++k) e[k] = -1;
  else
    e[i - 1] = 1;
  return e;
}

inline TropStructure make_trop(int c, int r, int s) {
  TropStructure t{c, r, s, {}, {}};
  const std::size_t dim = static_cast<std::size_t>(r + s);
  std::vector<IntVec> lin;
  for (int k = 0; k < s; ++k) {
    IntVec e(dim, Int(0));
    e[r + k] = 1;
    lin.push_back(e);
  }
  t.lineality_space = Cone::from_generators(dim, {}, lin);
  for (int size = 1; size <= c; ++size)
    detail::for_each_subset(static_cast<std::size_t>(r + 1), static_cast<std::size_t>(size),
                            [&](const std::vector<std::size_t>& I) {
                              std::vector<IntVec> g;
                              std::vector<int> Ii;
                              for (auto i : I) {
                                g.push_back(trop_generator(static_cast<int>(i), r, s));
                                Ii.push_back(static_cast<int>(i));
                              }
                              t.leaves.push_back(Leaf{Ii, Cone::from_generators(dim, g, lin)});
                            });
  return t;
}

struct ConeKind {
  bool big = false;
  std::vector<int> leaf;  // smallest leaf containing the cone when not big

  std::string to_string() const {
    if (big) return "big";
    std::string s = "leaf{";
    for (std::size_t i = 0; i < leaf.size(); ++i) s += (i ? "," : "") + std::to_string(leaf[i]);
    return s + "}";
  }
};

inline ConeKind classify_cone(const TropStructure& t, const Cone& sigma) {
  if (t.lineality_space.contains(sigma)) return ConeKind{false, {}};
  for (const auto& l : t.leaves)
    if (l.cone.contains(sigma)) return ConeKind{false, l.I};
  bool big = true;
  for (int i = 0; i <= t.r && big; ++i) {
    // sigma meets the relative interior of the 1-leaf lambda_i
    const Leaf& li = t.leaves[static_cast<std::size_t>(i)];
    Cone m = sigma.intersect(li.cone);
    if (t.lineality_space.contains(m)) big = false;
  }
  if (big) return ConeKind{true, {}};
  throw InvalidDataError("cone is neither big nor contained in a leaf");
}

// ---------------------------------------------------------------------------

struct PElemCone {
  std::vector<std::size_t> columns;  // one column per block, in block order
  std::size_t host = 0;              // a maximal cone of the fan containing it
  std::vector<Int> exps;             // l_{i j_i}
  std::vector<Int> ell_i;
  Int ell;
  IntVec v_sigma;
  Int c_sigma;
  IntVec rho;
  std::optional<RatVec> v_prime;  // v_sigma / ell, absent for ell = 0

  bool inside() const { return ell > 0; }
};

/// The numbers attached to a choice of one column per block.
inline PElemCone pelem_numbers(const GavData& d, const std::vector<std::size_t>& columns) {
  if (columns.size() != static_cast<std::size_t>(d.r + 1)) throw InvalidDataError("need one column per block");
  PElemCone p;
  p.columns = columns;
  Int prod = 1;
  for (auto k : columns) {
    p.exps.push_back(d.exponent(k));
    prod *= p.exps.back();
  }
  p.ell = (d.c - d.r) * prod;
  p.v_sigma.assign(d.ambient_dim(), Int(0));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    Int li = prod / p.exps[i];
    p.ell_i.push_back(li);
    p.ell += li;
    IntVec v = d.column(columns[i]);
    for (std::size_t a = 0; a < v.size(); ++a) p.v_sigma[a] += li * v[a];
  }
  auto [rho, cs] = make_primitive(p.v_sigma);
  p.rho = rho;
  p.c_sigma = cs;
  if (p.ell != 0) {
    RatVec vp(p.v_sigma.size());
    for (std::size_t a = 0; a < vp.size(); ++a) {
      vp[a] = make_rat(p.v_sigma[a], p.ell);
    }
    p.v_prime = vp;
  }
  return p;
}

inline std::vector<PElemCone> p_elementary_cones(const GavData& d, const Fan& fan) {
  std::map<std::vector<std::size_t>, PElemCone> found;
  for (std::size_t h = 0; h < fan.maximal.size(); ++h) {
    const auto& idx = fan.maximal[h];
    std::vector<std::vector<std::size_t>> per_block(static_cast<std::size_t>(d.r + 1));
    for (auto k : idx) {
      int b = d.block_of(k);
      if (b >= 0) per_block[b].push_back(k);
    }
    if (std::any_of(per_block.begin(), per_block.end(), [](const auto& v) { return v.empty(); })) continue;
    Cone host = fan.cone(h);
    std::vector<IntVec> gens;
    for (auto k : idx) gens.push_back(fan.rays[k]);
    std::vector<std::size_t> choice(per_block.size(), 0);
    for (;;) {
      std::vector<std::size_t> cols, local;
      for (std::size_t i = 0; i < per_block.size(); ++i) cols.push_back(per_block[i][choice[i]]);
      for (auto k : cols) local.push_back(static_cast<std::size_t>(std::find(idx.begin(), idx.end(), k) - idx.begin()));
      std::sort(local.begin(), local.end());
      if (face_closure(host, gens, local) == local && !found.count(cols)) {
        PElemCone p = pelem_numbers(d, cols);
        p.host = h;
        found.emplace(cols, std::move(p));
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == per_block[i].size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  }
  std::vector<PElemCone> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

inline std::vector<std::size_t> fan_ray_columns(const Fan& fan) {
  std::set<std::size_t> s;
  for (const auto& c : fan.maximal) s.insert(c.begin(), c.end());
  return {s.begin(), s.end()};
}

/// Rays of the refinement of the fan by trop(X): the fan's rays in column
/// order followed by the new rays rho_sigma in lexicographic order.
inline std::vector<IntVec> weakly_tropical_rays(const Fan& fan, const std::vector<PElemCone>& pe) {
  std::vector<IntVec> out;
  std::set<IntVec> seen;
  for (auto k : fan_ray_columns(fan))
    if (seen.insert(fan.rays[k]).second) out.push_back(fan.rays[k]);
  std::set<IntVec> extra;
  for (const auto& p : pe)
    if (!seen.count(p.rho)) extra.insert(p.rho);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

struct RefinementCell {
  Cone cone;
  std::size_t host = 0;   // maximal cone of the fan
  std::vector<int> leaf;  // maximal leaf it lies in
};

inline std::vector<RefinementCell> refinement_cells(const Fan& fan, const TropStructure& t) {
  std::vector<RefinementCell> all;
  auto leaves = t.maximal_leaves();
  for (std::size_t h = 0; h < fan.maximal.size(); ++h) {
    Cone sigma = fan.cone(h);
    for (const Leaf* l : leaves) all.push_back(RefinementCell{sigma.intersect(l->cone), h, l->I});
  }
  std::vector<RefinementCell> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < all.size() && !drop; ++j) {
      if (i == j || !all[j].cone.contains(all[i].cone)) continue;
      // strictly larger, or an equal cell seen earlier
      if (all[j].cone != all[i].cone || j < i) drop = true;
    }
    if (!drop) out.push_back(all[i]);
  }
  std::sort(out.begin(), out.end(), [](const RefinementCell& a, const RefinementCell& b) {
    return a.cone.rays() < b.cone.rays();
  });
  return out;
}

// ---------------------------------------------------------------------------

/// The linear system whose solutions are the defining linear forms of a cell:
/// <u, v_rho> = -1 on rays of the fan, <u, v_sigma> = -ell_sigma on new rays.
struct FormSystem {
  std::vector<IntVec> rows;
  std::vector<Int> rhs;
};

inline FormSystem form_system(const Cone& cell, const Fan& fan, const std::vector<PElemCone>& pe) {
  std::set<IntVec> fan_rays;
  for (auto k : fan_ray_columns(fan)) fan_rays.insert(fan.rays[k]);
  FormSystem sys;
  for (const auto& ray : cell.rays()) {
    if (fan_rays.count(ray)) {
      sys.rows.push_back(ray);
      sys.rhs.push_back(-1);
      continue;
    }
    auto it = std::find_if(pe.begin(), pe.end(), [&](const PElemCone& p) { return p.rho == ray; });
    if (it == pe.end())
      throw std::logic_error("cell ray " + to_string(ray) + " is neither a ray of the fan nor a P-elementary ray");
    sys.rows.push_back(it->v_sigma);
    sys.rhs.push_back(-it->ell);
  }
  return sys;
}

inline std::optional<RatVec> solve_form(const FormSystem& sys, std::size_t dim) {
  if (sys.rows.empty()) return RatVec(dim, Rat(0));
  auto sol = solve_rational(to_rational(IntMatrix::from_rows(sys.rows, dim)), RatVec(sys.rhs.begin(), sys.rhs.end()));
  if (!sol) return std::nullopt;
  return sol->particular;
}

inline std::optional<RatVec> defining_linear_form(const Cone& cell, const Fan& fan, const std::vector<PElemCone>& pe) {
  return solve_form(form_system(cell, fan, pe), cell.ambient_dim());
}

/// Smallest k such that k times the system has an integral solution.
inline Int form_index(const FormSystem& sys, std::size_t dim) {
  if (sys.rows.empty()) return 1;
  IntMatrix M = IntMatrix::from_rows(sys.rows, dim);
  if (!solve_rational(to_rational(M), RatVec(sys.rhs.begin(), sys.rhs.end())))
    throw NotQGorensteinError("inconsistent form system");
  for (Int k = 1;; ++k) {
    IntVec b(sys.rhs.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = k * sys.rhs[i];
    if (solve_integer(M, b)) return k;
  }
}

inline Polyhedron cell_polyhedron(const Cone& cell, const RatVec& u) {
  Int den = 1;
  for (const auto& x : u) den = lcm(den, x.get_den());
  IntVec a(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rat s = u[i] * den;
    a[i] = s.get_num();
  }
  Polyhedron half = Polyhedron::from_inequalities(u.size(), {Halfspace{a, Int(-den)}});
  return intersect(half, cell);
}

struct ComplexCell {
  RefinementCell cell;
  FormSystem system;
  RatVec form;
  Polyhedron poly;  // A_sigma' = cell cap {<u, v> >= -1}
};

struct AnticanComplex {
  std::size_t dim = 0;
  Fan fan;
  TropStructure trop;
  std::vector<PElemCone> pelem;
  std::vector<IntVec> rays;  // rays of the refinement
  std::vector<ComplexCell> cells;
  std::vector<RatVec> vertices;
  bool bounded = true;

  std::vector<IntVec> fan_rays() const {
    std::vector<IntVec> out;
    for (auto k : fan_ray_columns(fan)) out.push_back(fan.rays[k]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline std::string describe_cell(const Cone& c) {
  std::string s = "cone(";
  for (std::size_t i = 0; i < c.rays().size(); ++i) s += (i ? "," : "") + to_string(c.rays()[i]);
  return s + ")";
}

inline AnticanComplex build_complex(const GavData& d, const Fan& fan) {
  require_valid(d);
  if (auto err = fan.check()) throw InvalidDataError("fan: " + *err);
  AnticanComplex ac;
  ac.dim = d.ambient_dim();
  ac.fan = fan;
  ac.trop = make_trop(d.c, d.r, d.s);
  ac.pelem = p_elementary_cones(d, fan);
  ac.rays = weakly_tropical_rays(fan, ac.pelem);
  std::set<RatVec> verts;
  for (auto& rc : refinement_cells(fan, ac.trop)) {
    FormSystem sys = form_system(rc.cone, fan, ac.pelem);
    auto u = solve_form(sys, ac.dim);
    if (!u) throw NotQGorensteinError("no defining linear form on " + describe_cell(rc.cone));
    Polyhedron p = cell_polyhedron(rc.cone, *u);
    if (!p.is_bounded()) ac.bounded = false;
    for (auto& v : p.vertices()) verts.insert(v);
    ac.cells.push_back(ComplexCell{std::move(rc), std::move(sys), std::move(*u), std::move(p)});
  }
  ac.vertices.assign(verts.begin(), verts.end());
  return ac;
}

inline AnticanComplex build_complex(const GavData& d) { return build_complex(d, model_fan(d)); }

/// The vertex set predicted in closed form: origin, rays of the fan and the
/// points v'_sigma with ell_sigma > 0.
inline std::vector<RatVec> expected_vertices(const AnticanComplex& ac) {
  std::set<RatVec> s;
  s.insert(RatVec(ac.dim, Rat(0)));
  for (const auto& r : ac.fan_rays()) s.insert(to_rational(r));
  for (const auto& p : ac.pelem)
    if (p.inside()) s.insert(*p.v_prime);
  return {s.begin(), s.end()};
}

/// Lattice points of |A|, requires a bounded complex.
inline std::vector<IntVec> complex_lattice_points(const AnticanComplex& ac) {
  if (!ac.bounded) throw PolyhedralError("lattice enumeration requires bounded polyhedron");
  std::set<IntVec> s;
  for (const auto& c : ac.cells)
    for (auto& x : lattice_points(c.poly)) s.insert(x);
  return {s.begin(), s.end()};
}

inline Int gorenstein_index(const AnticanComplex& ac) {
  Int k = 1;
  for (const auto& c : ac.cells) k = lcm(k, form_index(c.system, ac.dim));
  return k;
}

inline Rat discrepancy(const PElemCone& p) {
  return make_rat(p.ell, p.c_sigma) - 1;
}

// ---------------------------------------------------------------------------

enum class Singularity { NotLogTerminal, LogTerminalOnly, Canonical, Terminal };

inline std::string to_string(Singularity s) {
  switch (s) {
    case Singularity::NotLogTerminal: return "NotLogTerminal";
    case Singularity::LogTerminalOnly: return "LogTerminalOnly";
    case Singularity::Canonical: return "Canonical";
    case Singularity::Terminal: return "Terminal";
  }
  return "?";
}

struct SingularityVerdict {
  Singularity kind = Singularity::Terminal;
  std::optional<IntVec> witness_ray;   // unbounded direction
  std::optional<IntVec> witness_point; // offending lattice point
};

/// Value of the defining form at v; all cells containing v agree.
inline std::optional<Rat> form_value(const AnticanComplex& ac, const IntVec& v) {
  std::optional<Rat> val;
  for (const auto& c : ac.cells) {
    if (!c.cell.cone.contains(v)) continue;
    Rat x = dot(c.form, v);
    if (val && *val != x) throw std::logic_error("defining forms disagree at " + to_string(v));
    val = x;
  }
  return val;
}

inline SingularityVerdict singularity_type(const AnticanComplex& ac) {
  SingularityVerdict out;
  if (!ac.bounded) {
    out.kind = Singularity::NotLogTerminal;
    // prefer a ray of the refinement along which the form does not decrease
    for (const auto& c : ac.cells)
      for (const auto& ray : c.cell.cone.rays())
        if (!out.witness_ray && dot(c.form, ray) >= 0) out.witness_ray = ray;
    for (const auto& c : ac.cells)
      if (!out.witness_ray && !c.poly.rays().empty()) out.witness_ray = c.poly.rays().front();
    return out;
  }
  auto pts = complex_lattice_points(ac);
  auto gens = ac.fan_rays();
  std::set<IntVec> allowed(gens.begin(), gens.end());
  allowed.insert(IntVec(ac.dim, Int(0)));
  std::optional<IntVec> extra;
  for (const auto& p : pts) {
    if (allowed.count(p)) continue;
    if (!extra) extra = p;
    auto val = form_value(ac, p);
    if (val && *val > -1) {
      out.kind = Singularity::LogTerminalOnly;
      out.witness_point = p;
      return out;
    }
  }
  if (extra) {
    out.kind = Singularity::Canonical;
    out.witness_point = extra;
    return out;
  }
  out.kind = Singularity::Terminal;
  return out;
}

/// Re-check the witness carried by a verdict.
inline bool verify_witness(const AnticanComplex& ac, const SingularityVerdict& v) {
  switch (v.kind) {
    case Singularity::NotLogTerminal: {
      if (!v.witness_ray) return false;
      for (const auto& c : ac.cells) {
        // the whole ray lies in the cell polyhedron
        if (!c.cell.cone.contains(*v.witness_ray)) continue;
        if (dot(c.form, *v.witness_ray) >= 0) return true;
      }
      return false;
    }
    case Singularity::LogTerminalOnly:
    case Singularity::Canonical: {
      if (!v.witness_point) return false;
      const IntVec& p = *v.witness_point;
      auto gens = ac.fan_rays();
      if (std::find(gens.begin(), gens.end(), p) != gens.end() || detail::is_zero_vec(p)) return false;
      auto val = form_value(ac, p);
      if (!val || *val < -1) return false;
      return v.kind == Singularity::Canonical ? *val == -1 : *val > -1;
    }
    case Singularity::Terminal: {
      auto pts = complex_lattice_points(ac);
      auto gens = ac.fan_rays();
      for (const auto& p : pts)
        if (!detail::is_zero_vec(p) && std::find(gens.begin(), gens.end(), p) == gens.end()) return false;
      return true;
    }
  }
  return false;
}

enum class SingularityBound { LogTerminal, Canonical, Terminal };

/// Exponent inequalities for a P-elementary cone with exponents l, gcd c_sigma.
inline bool thm3_check(const std::vector<Int>& l, const Int& c_sigma, int r, int c, SingularityBound kind) {
  Rat sum = 0, prod = 1;
  for (const auto& x : l) {
    sum += make_rat(1, x);
    prod /= x;
  }
  Rat base = r - c;
  switch (kind) {
    case SingularityBound::LogTerminal: return sum > base;
    case SingularityBound::Canonical: return sum >= base + c_sigma * prod;
    case SingularityBound::Terminal: return sum > base + c_sigma * prod;
  }
  return false;
}

inline bool thm3_check(const PElemCone& p, int r, int c, SingularityBound kind) {
  return thm3_check(p.exps, p.c_sigma, r, c, kind);
}

// ---------------------------------------------------------------------------
// Exponent tuples (l_0 <= ... <= l_{c+1}) with sum of inverses > 1.

struct TupleEntry {
  enum class Kind { Fixed, AtMost, Free } kind = Kind::Fixed;
  int value = 0;
};

struct TupleFamily {
  std::vector<TupleEntry> entries;

  std::string to_string() const {
    static const char* names[] = {"x", "y", "z", "w", "t"};
    std::string s = "(";
    std::size_t free_i = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      const auto& e = entries[i];
      if (e.kind == TupleEntry::Kind::Fixed) s += std::to_string(e.value);
      if (e.kind == TupleEntry::Kind::AtMost) s += "<=" + std::to_string(e.value);
      if (e.kind == TupleEntry::Kind::Free) s += names[std::min<std::size_t>(free_i++, 4)];
    }
    return s + ")";
  }

  /// Membership of a sorted tuple.
  bool contains(const std::vector<int>& t) const {
    if (t.size() != entries.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 1 || (i && t[i] < t[i - 1])) return false;
      const auto& e = entries[i];
      if (e.kind == TupleEntry::Kind::Fixed && t[i] != e.value) return false;
      if (e.kind == TupleEntry::Kind::AtMost && t[i] > e.value) return false;
    }
    return true;
  }
};

struct TupleGroup {
  std::vector<int> prefix;
  std::vector<TupleFamily> families;
};

inline bool tuple_condition(const std::vector<int>& t) {
  Rat s = 0;
  for (int x : t) s += make_rat(1, x);
  return s > 1;
}

namespace detail {

inline void tuples_rec(std::vector<int>& prefix, std::size_t slots, const Rat& need, int min_v,
                       std::vector<TupleFamily>& out) {
  // the remaining entries must contribute more than `need`
  auto fixed = [&]() {
    TupleFamily f;
    for (int v : prefix) f.entries.push_back({TupleEntry::Kind::Fixed, v});
    return f;
  };
  if (need < 0 || (need == 0 && slots > 0)) {
    TupleFamily f = fixed();
    for (std::size_t i = 0; i < slots; ++i) f.entries.push_back({TupleEntry::Kind::Free, 0});
    out.push_back(f);
    return;
  }
  if (slots == 0) return;
  if (slots == 1) {
    // 1/l > need  <=>  l < 1/need
    Rat inv = 1 / need;
    Int mx = ceil(inv) - 1;
    if (mx >= min_v) {
      TupleFamily f = fixed();
      f.entries.push_back({TupleEntry::Kind::AtMost, static_cast<int>(mx.get_si())});
      out.push_back(f);
    }
    return;
  }
  for (int v = min_v; make_rat(static_cast<long>(slots), v) > need; ++v) {
    prefix.push_back(v);
    tuples_rec(prefix, slots - 1, need - make_rat(1, v), v, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Families of sorted (c+2)-tuples of positive integers with sum of inverses
/// greater than one, grouped by their first c entries. Runs of families that
/// differ only in the last fixed entry before free symbols are merged into an
/// upper bound.
inline std::vector<TupleGroup> platonic_tuples(int c) {
  if (c < 1 || c > 4) throw InvalidDataError("unsupported complexity");
  std::vector<int> prefix;
  std::vector<TupleFamily> raw;
  detail::tuples_rec(prefix, static_cast<std::size_t>(c + 2), Rat(1), 1, raw);

  std::vector<TupleFamily> merged;
  for (const auto& f : raw) {
    if (!merged.empty()) {
      TupleFamily& last = merged.back();
      std::size_t k = f.entries.size();
      std::size_t first_free = k;
      for (std::size_t i = 0; i < k; ++i)
        if (f.entries[i].kind == TupleEntry::Kind::Free) {
          first_free = i;
          break;
        }
      bool same_shape = first_free < k && first_free > 0 && first_free == [&] {
        for (std::size_t i = 0; i < k; ++i)
          if (last.entries[i].kind == TupleEntry::Kind::Free) return i;
        return k;
      }();
      if (same_shape) {
        std::size_t j = first_free - 1;
        bool same_prefix = true;
        for (std::size_t i = 0; i < j; ++i)
          if (last.entries[i].kind != TupleEntry::Kind::Fixed || last.entries[i].value != f.entries[i].value)
            same_prefix = false;
        if (same_prefix && f.entries[j].kind == TupleEntry::Kind::Fixed &&
            f.entries[j].value == last.entries[j].value + 1) {
          last.entries[j] = {TupleEntry::Kind::AtMost, f.entries[j].value};
          continue;
        }
      }
    }
    merged.push_back(f);
  }

  std::vector<TupleGroup> groups;
  for (const auto& f : merged) {
    std::vector<int> key;
    for (int i = 0; i < c; ++i) {
      const auto& e = f.entries[static_cast<std::size_t>(i)];
      if (e.kind != TupleEntry::Kind::Fixed) break;
      key.push_back(e.value);
    }
    if (groups.empty() || groups.back().prefix != key) groups.push_back(TupleGroup{key, {}});
    groups.back().families.push_back(f);
  }
  return groups;
}

inline bool tuple_accepted(const std::vector<TupleGroup>& groups, std::vector<int> t) {
  std::sort(t.begin(), t.end());
  for (const auto& g : groups)
    for (const auto& f : g.families)
      if (f.contains(t)) return true;
  return false;
}

// ---------------------------------------------------------------------------

/// conv(|A|) cap |trop(X)| = |A|, checked leaf by leaf inside the support of
/// the fan: every vertex of conv(vertices) cap cell must satisfy the cell's
/// form inequality.
inline bool is_piecewise_convex(const AnticanComplex& ac) {
  if (!ac.bounded) throw PreconditionError("convexity test requires a bounded complex");
  Polyhedron hull = Polyhedron::from_points(ac.dim, ac.vertices);
  for (const auto& c : ac.cells) {
    Polyhedron piece = intersect(hull, c.cell.cone);
    for (const auto& v : piece.vertices())
      if (dot(c.form, v) < -1) return false;
  }
  return true;
}

}  // namespace acx
