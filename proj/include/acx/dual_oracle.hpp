#pragma once

// Second construction of the anticanonical complex in the Fano case: the
// anticanonical polyhedron A_X, dual to B_X, refined by the fan and trop(X).

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acx/anticanonical.hpp"
#include "acx/arrangement.hpp"
#include "acx/polyhedral.hpp"

namespace acx {

struct DualData {
  Polyhedron B_minus_K;  // fiber of -K_X in the positive orthant of Q^{n+m}
  Polyhedron B;          // Minkowski sum of the Newton polytopes of the relations
  IntVec e_sigma;
  Polyhedron B_X;  // in Q^{r+s}, dual side
  Polyhedron A_X;
};

inline Polyhedron newton_polytope(std::size_t dim, const Relation& g) {
  std::vector<IntVec> pts;
  for (const auto& t : g.terms)
    if (t.coeff != 0) pts.push_back(t.exponent);
  return Polyhedron::from_points(dim, pts);
}

/// {u : P^T u in S}
inline Polyhedron pullback_along_transpose(const IntMatrix& P, const Polyhedron& S) {
  const std::size_t dim = P.rows();
  if (S.is_empty()) return Polyhedron::empty(dim);
  std::vector<Halfspace> in, eq;
  for (const auto& h : S.inequalities()) in.push_back(Halfspace{P * h.a, h.b});
  for (const auto& h : S.equations()) eq.push_back(Halfspace{P * h.a, h.b});
  return Polyhedron::from_inequalities(dim, in, eq);
}

/// e_sigma defaults to (1,...,1). With that sign the toric case gives
/// B_X = {u : P^T u >= -1}, the polytope of -K.
inline DualData anticanonical_polyhedron(const GavData& d, std::optional<IntVec> e_sigma = std::nullopt) {
  require_valid(d);
  if (!is_fano(d)) throw PreconditionError("anticanonical polyhedron requires an ample anticanonical class");
  const std::size_t N = d.num_cols();
  DualData out;
  GradingData g = degrees(d);
  out.B_minus_K = fiber_polytope(g.Q, anticanonical_class(d));
  out.B = Polyhedron::from_points(N, {IntVec(N, Int(0))});
  for (const auto& rel : relations(d)) out.B = minkowski_sum(out.B, newton_polytope(N, rel));
  out.e_sigma = e_sigma ? *e_sigma : IntVec(N, Int(1));
  if (out.e_sigma.size() != N) throw InvalidDataError("e_sigma has wrong length");
  RatVec shift(N);
  for (std::size_t k = 0; k < N; ++k) shift[k] = -out.e_sigma[k];
  Polyhedron S = minkowski_sum(minkowski_sum(out.B_minus_K, out.B), Polyhedron::from_points(N, {shift}));
  out.B_X = pullback_along_transpose(d.P, S);
  out.A_X = dual_polyhedron(out.B_X);
  return out;
}

// ---------------------------------------------------------------------------

struct CellComparison {
  std::size_t cell = 0;
  bool agree = false;
  std::string detail;
};

struct CrossReport {
  std::vector<CellComparison> cells;
  std::vector<RatVec> primary_vertices;
  std::vector<RatVec> oracle_vertices;
  bool vertices_agree = false;
  bool support_agree = false;  // piecewise equality and the cells cover trop(X)

  bool ok() const { return vertices_agree && support_agree; }

  std::string summary() const {
    std::size_t bad = 0;
    for (const auto& c : cells) bad += !c.agree;
    return std::to_string(cells.size() - bad) + "/" + std::to_string(cells.size()) + " cells agree, vertices " +
           (vertices_agree ? "agree" : "differ") + ", support " + (support_agree ? "agrees" : "differs");
  }
};

/// Every facet of a cell, taken inside its maximal leaf, is either on the
/// boundary of the leaf or shared with another cell of the same leaf.
inline bool cells_cover_trop(const AnticanComplex& ac) {
  for (const Leaf* leaf : ac.trop.maximal_leaves()) {
    std::vector<const ComplexCell*> in;
    for (const auto& c : ac.cells)
      if (leaf->cone.contains(c.cell.cone)) in.push_back(&c);
    if (in.empty()) return false;
    const std::size_t full = leaf->cone.dimension();
    for (const ComplexCell* c : in) {
      const Cone& cone = c->cell.cone;
      if (cone.dimension() != full) return false;
      for (const auto& f : cone.facets()) {
        std::vector<IntVec> fr;
        for (const auto& r : cone.rays())
          if (dot(f, r) == 0) fr.push_back(r);
        Cone facet = Cone::from_generators(cone.ambient_dim(), fr, cone.lineality());
        if (facet.dimension() != full - 1) continue;
        bool boundary = false;
        for (const auto& l : ac.trop.leaves)
          if (l.I.size() + 1 == leaf->I.size() && leaf->cone.contains(l.cone) && l.cone.contains(facet))
            boundary = true;
        if (leaf->I.size() == 1 && ac.trop.lineality_space.contains(facet)) boundary = true;
        if (boundary) continue;
        bool shared = false;
        for (const ComplexCell* o : in)
          if (o != c && o->cell.cone.contains(facet)) shared = true;
        if (!shared) return false;
      }
    }
  }
  return true;
}

/// X is complete iff its fan covers trop(X).
inline void require_complete(const AnticanComplex& ac) {
  if (!cells_cover_trop(ac)) throw PreconditionError("the fan does not cover trop(X), so X is not complete");
}

/// Compare A_X cap sigma' with A_sigma' for every cell of a given complex.
inline CrossReport cross_validate(const AnticanComplex& ac, const DualData& dual) {
  CrossReport rep;
  std::set<RatVec> ov;
  bool all = true;
  for (std::size_t i = 0; i < ac.cells.size(); ++i) {
    const auto& c = ac.cells[i];
    Polyhedron piece = intersect(dual.A_X, c.cell.cone);
    for (auto& v : piece.vertices()) ov.insert(v);
    CellComparison cmp{i, piece == c.poly, {}};
    if (!cmp.agree) {
      auto list = [](const std::vector<RatVec>& vs) {
        std::string s;
        for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
        return s;
      };
      cmp.detail = describe_cell(c.cell.cone) + ": oracle piece has vertices " + list(piece.vertices()) +
                   ", complex cell has " + list(c.poly.vertices());
      all = false;
    }
    rep.cells.push_back(std::move(cmp));
  }
  rep.primary_vertices = ac.vertices;
  rep.oracle_vertices.assign(ov.begin(), ov.end());
  rep.vertices_agree = rep.primary_vertices == rep.oracle_vertices;
  rep.support_agree = all && cells_cover_trop(ac);
  return rep;
}

inline CrossReport cross_validate(const GavData& d, const AnticanComplex& ac) {
  require_complete(ac);
  return cross_validate(ac, anticanonical_polyhedron(d));
}

inline CrossReport cross_validate(const GavData& d) { return cross_validate(d, build_complex(d)); }

}  // namespace acx
