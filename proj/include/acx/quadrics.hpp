#pragma once

// Three-dimensional Q-factorial Fano intrinsic quadrics of complexity two with
// at most canonical singularities: candidate templates, filtering, invariants
// and deduplication.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acx/anticanonical.hpp"
#include "acx/arrangement.hpp"

namespace acx {

enum class QuadricTemplate { Ia, Ib, IIa, IIb, III };

inline std::string to_string(QuadricTemplate t) {
  switch (t) {
    case QuadricTemplate::Ia: return "(I)(a)";
    case QuadricTemplate::Ib: return "(I)(b)";
    case QuadricTemplate::IIa: return "(II)(a)";
    case QuadricTemplate::IIb: return "(II)(b)";
    case QuadricTemplate::III: return "(III)";
  }
  return "?";
}

inline const std::vector<QuadricTemplate>& all_templates() {
  static const std::vector<QuadricTemplate> t{QuadricTemplate::Ia, QuadricTemplate::Ib, QuadricTemplate::IIa,
                                              QuadricTemplate::IIb, QuadricTemplate::III};
  return t;
}

inline bool has_y(QuadricTemplate t) { return t == QuadricTemplate::Ib || t == QuadricTemplate::IIb || t == QuadricTemplate::III; }

/// Row-normalized P for each case. Upper rows fixed by the block pattern, the
/// last row carries the free parameters x (first column) and y (second).
inline GavData quadric_template(QuadricTemplate t, const Int& x, const Int& y = 0) {
  GavData d;
  d.c = 2;
  d.r = 3;
  d.s = 1;
  RatMatrix A(3, 4);
  for (int i = 0; i < 3; ++i) {
    A(i, i) = 1;
    A(i, 3) = -1;
  }
  d.A = A;
  std::vector<IntVec> cols;
  const bool square0 = t == QuadricTemplate::Ia || t == QuadricTemplate::IIa;
  if (square0) {
    d.n = {1, 1, 1, 1};
    d.l = {{2}, {2}, {2}, {2}};
    cols.push_back({-2, -2, -2, x});
  } else {
    d.n = {2, 1, 1, 1};
    d.l = {{1, 1}, {2}, {2}, {2}};
    cols.push_back({-1, -1, -1, x});
    cols.push_back({-1, -1, -1, y});
  }
  cols.push_back({2, 0, 0, 1});
  cols.push_back({0, 2, 0, 1});
  cols.push_back({0, 0, 2, 1});
  switch (t) {
    case QuadricTemplate::Ia: cols.push_back({0, 0, 0, -1}); break;
    case QuadricTemplate::Ib: break;
    case QuadricTemplate::IIa: cols.push_back({0, 0, 0, -1}); cols.push_back({0, 0, 0, 1}); break;
    case QuadricTemplate::IIb: cols.push_back({0, 0, 0, -1}); break;
    case QuadricTemplate::III: cols.push_back({0, 0, 0, -1}); cols.push_back({0, 0, 0, 1}); break;
  }
  d.m = static_cast<int>(cols.size()) - (square0 ? 4 : 5);
  d.P = IntMatrix::from_columns(cols, 4);
  d.ample_anticanonical = true;
  return d;
}

// ---------------------------------------------------------------------------
// Parameter bounds, derived from the P-elementary numbers of the templates.

/// t(p) = slope * p + offset
struct AffineParam {
  Rat slope, offset;
  Rat at(const Int& p) const { return slope * p + offset; }
};

struct BoundConstraint {
  std::string what;
  bool on_y = false;
  AffineParam t;
  Rat lo, hi;
  bool lo_strict = false, hi_strict = false;

  /// Integer parameters p with lo <(=) t(p) <(=) hi.
  std::pair<Int, Int> integer_range() const {
    if (t.slope == 0) throw std::logic_error("constraint does not depend on its parameter");
    Rat a = (lo - t.offset) / t.slope, b = (hi - t.offset) / t.slope;
    bool a_strict = lo_strict, b_strict = hi_strict;
    if (t.slope < 0) {
      std::swap(a, b);
      std::swap(a_strict, b_strict);
    }
    Int lo_i = ceil(a), hi_i = floor(b);
    if (a_strict && Rat(lo_i) == a) lo_i += 1;
    if (b_strict && Rat(hi_i) == b) hi_i -= 1;
    return {lo_i, hi_i};
  }

  std::string to_string() const {
    std::ostringstream os;
    os << lo.get_str() << (lo_strict ? " < " : " <= ") << what << (hi_strict ? " < " : " <= ") << hi.get_str();
    return os.str();
  }
};

namespace detail {

enum class PointKind { VPrime, LinealityPoint };

/// Last coordinate of v'_sigma, or of the point of conv(generators) on the
/// lineality space, for the selection `cols`, as an affine function of the
/// template parameter.
inline AffineParam lineality_coordinate(QuadricTemplate t, const std::vector<std::size_t>& cols, bool on_y,
                                        PointKind kind) {
  auto value = [&](const Int& p) {
    GavData d = on_y ? quadric_template(t, 0, p) : quadric_template(t, p, 0);
    PElemCone pe = pelem_numbers(d, cols);
    Int denom = pe.ell;
    if (kind == PointKind::LinealityPoint) denom = std::accumulate(pe.ell_i.begin(), pe.ell_i.end(), Int(0));
    return make_rat(pe.v_sigma.back(), denom);
  };
  Rat v0 = value(0), v1 = value(1);
  return AffineParam{v1 - v0, v0};
}

}  // namespace detail

struct ParameterBounds {
  QuadricTemplate tmpl;
  std::vector<BoundConstraint> constraints;
  Int x_lo, x_hi, y_lo = 0, y_hi = 0;
  bool x_le_y = false;
};

/// The canonicity and lineality constraints of each case. A vertex v'_sigma
/// on the lineality space lies in (0,1] when sigma covers the positive
/// lineality direction, in [-1,0) for the negative one; any point of the
/// complex on the lineality space of a canonical variety has last coordinate
/// in [-1,1].
inline ParameterBounds derive_bounds(QuadricTemplate t) {
  using detail::PointKind;
  ParameterBounds b{t, {}, 0, 0};
  auto add = [&](const std::string& what, bool on_y, std::vector<std::size_t> cols, PointKind k, Rat lo, bool ls,
                 Rat hi, bool hs) {
    b.constraints.push_back(
        BoundConstraint{what, on_y, detail::lineality_coordinate(t, cols, on_y, k), lo, hi, ls, hs});
  };
  switch (t) {
    case QuadricTemplate::Ia:
      add("v'(v01,v11,v21,v31)", false, {0, 1, 2, 3}, PointKind::VPrime, 0, true, 1, false);
      break;
    case QuadricTemplate::Ib:
      add("v'(v01,v11,v21,v31)", false, {0, 2, 3, 4}, PointKind::VPrime, 0, true, 1, false);
      add("v'(v02,v11,v21,v31)", true, {1, 2, 3, 4}, PointKind::VPrime, -1, false, 0, true);
      break;
    case QuadricTemplate::IIa:
      add("lin(v01,v11,v21,v31)", false, {0, 1, 2, 3}, PointKind::LinealityPoint, -1, false, 1, false);
      break;
    case QuadricTemplate::IIb:
      add("lin(v01,v11,v21,v31)", false, {0, 2, 3, 4}, PointKind::LinealityPoint, -1, false, 1, false);
      add("v'(v02,v11,v21,v31)", true, {1, 2, 3, 4}, PointKind::VPrime, 0, false, 1, false);
      b.x_le_y = true;
      break;
    case QuadricTemplate::III:
      add("lin(v01,v11,v21,v31)", false, {0, 2, 3, 4}, PointKind::LinealityPoint, -1, false, 1, false);
      add("lin(v02,v11,v21,v31)", true, {1, 2, 3, 4}, PointKind::LinealityPoint, -1, false, 1, false);
      b.x_le_y = true;
      break;
  }
  bool have_x = false, have_y = false;
  for (const auto& c : b.constraints) {
    auto [lo, hi] = c.integer_range();
    Int& L = c.on_y ? b.y_lo : b.x_lo;
    Int& H = c.on_y ? b.y_hi : b.x_hi;
    bool& have = c.on_y ? have_y : have_x;
    L = have ? std::max(L, lo) : lo;
    H = have ? std::min(H, hi) : hi;
    have = true;
  }
  return b;
}

struct QuadricCandidate {
  QuadricTemplate tmpl;
  Int x, y;
  GavData data;

  std::string label() const {
    std::string s = to_string(tmpl) + " x=" + x.get_str();
    if (has_y(tmpl)) s += " y=" + y.get_str();
    return s;
  }
};

inline std::vector<QuadricCandidate> enumerate_candidates() {
  std::vector<QuadricCandidate> out;
  for (auto t : all_templates()) {
    ParameterBounds b = derive_bounds(t);
    for (Int x = b.x_lo; x <= b.x_hi; ++x) {
      if (!has_y(t)) {
        out.push_back(QuadricCandidate{t, x, 0, quadric_template(t, x)});
        continue;
      }
      for (Int y = b.y_lo; y <= b.y_hi; ++y) {
        if (b.x_le_y && x > y) continue;
        out.push_back(QuadricCandidate{t, x, y, quadric_template(t, x, y)});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants.

/// Isomorphism types of K / <w_S> over all subsets S of size one and two of
/// the generator degrees, together with K / <-K>. Stable under automorphisms
/// of K and renumbering of the generators.
inline std::vector<std::string> degree_signature(const AbelianGroup& K, const std::vector<ClassElem>& w,
                                                 const ClassElem& anticanonical) {
  auto quotient = [&](const std::vector<const ClassElem*>& gens) {
    const std::size_t f = K.free_rank, t = K.torsion.size();
    IntMatrix M(f + t, t + gens.size());
    for (std::size_t i = 0; i < t; ++i) M(f + i, i) = K.torsion[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t i = 0; i < f; ++i) M(i, t + j) = gens[j]->free[i];
      for (std::size_t i = 0; i < t; ++i) M(f + i, t + j) = gens[j]->torsion[i];
    }
    return cokernel(M).codomain.to_string();
  };
  std::vector<std::string> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back("1:" + quotient({&w[i]}));
    for (std::size_t j = i + 1; j < w.size(); ++j) out.push_back("2:" + quotient({&w[i], &w[j]}));
  }
  std::sort(out.begin(), out.end());
  out.push_back("K:" + quotient({&anticanonical}));
  return out;
}

struct ClassInvariants {
  AbelianGroup class_group;
  int picard = 0;
  Int fano_index;
  Int gorenstein_index;
  std::vector<IntVec> eff_rays;  // primitive generators in the free part
  bool eff_smooth = false;
  std::vector<std::string> signature;

  std::string key() const {
    std::ostringstream os;
    os << class_group.to_string() << "|" << picard << "|" << fano_index.get_str() << "|" << eff_rays.size() << "|"
       << eff_smooth;
    for (const auto& s : signature) os << "|" << s;
    return os.str();
  }
};

inline bool cone_is_smooth(const Cone& c) {
  if (!c.is_pointed()) return false;
  const auto& rays = c.rays();
  if (rank_of_vectors(rays, c.ambient_dim()) != rays.size()) return false;
  // the rays extend to a lattice basis iff the maximal minors have gcd one
  IntMatrix M = IntMatrix::from_columns(rays, c.ambient_dim());
  auto snf = smith_normal_form(M);
  for (const auto& x : snf.diagonal())
    if (x != 1) return false;
  return true;
}

inline ClassInvariants class_invariants(const GavData& d, const Fan& fan) {
  GradingData g = degrees(d);
  ClassInvariants inv;
  inv.class_group = g.Q.codomain;
  inv.picard = picard_number(d, fan);
  inv.fano_index = fano_index(d, fan);
  auto gi = gorenstein_index(d, fan);
  inv.gorenstein_index = gi ? *gi : Int(0);
  Cone eff = divisor_cones(d, fan).eff;
  inv.eff_rays = eff.rays();
  inv.eff_smooth = cone_is_smooth(eff);
  inv.signature = degree_signature(g.Q.codomain, g.generator_degrees, anticanonical_class(d));
  return inv;
}

// ---------------------------------------------------------------------------
// Pipeline.

struct CandidateResult {
  QuadricCandidate candidate;
  bool accepted = false;
  std::string reason;  // rejection reason, empty when accepted
  std::optional<Singularity> verdict;
  std::optional<ClassInvariants> invariants;
  std::optional<AnticanComplex> complex;
  bool needs_manual_argument = false;  // some generator degree has a graded component of dimension > 1
};

inline CandidateResult run_pipeline(const QuadricCandidate& cand) {
  CandidateResult res;
  res.candidate = cand;
  const GavData& d = cand.data;
  auto reject = [&](const std::string& why) {
    res.reason = why;
    return res;
  };
  auto v = validate(d);
  if (!v.empty()) return reject("invalid data: " + v.front().condition);
  Fan fan;
  try {
    fan = fan_from_ample(d, anticanonical_class(d));
  } catch (const PreconditionError& e) {
    return reject(std::string("no model with ample anticanonical class: ") + e.what());
  }
  if (fan_ray_columns(fan).size() != d.num_cols()) return reject("some column of P is not a ray of the fan");
  if (!is_q_factorial(d, fan)) return reject("not Q-factorial");
  if (!is_fano(d, fan)) return reject("not Fano");
  try {
    res.complex = build_complex(d, fan);
  } catch (const NotQGorensteinError& e) {
    return reject(std::string("not Q-Gorenstein: ") + e.what());
  }
  res.verdict = singularity_type(*res.complex).kind;
  if (*res.verdict != Singularity::Canonical && *res.verdict != Singularity::Terminal)
    return reject("singularities worse than canonical: " + to_string(*res.verdict));
  res.invariants = class_invariants(d, fan);
  GradingData g = degrees(d);
  for (const auto& w : g.generator_degrees) {
    auto dim = graded_component_dim(d, w);
    if (!dim || *dim != 1) res.needs_manual_argument = true;
  }
  res.accepted = true;
  return res;
}

// ---------------------------------------------------------------------------
// Explicit equivalence: P2 = U * P1 * pi with pi a block-respecting column
// permutation and U unimodular. For r = c + 1 any permutation of the blocks is
// realized on A by a projective transformation, so this gives isomorphic
// graded rings mapping -K to -K.

namespace detail {

inline std::vector<std::vector<std::size_t>> block_respecting_permutations(const GavData& d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<int> blocks(static_cast<std::size_t>(d.r + 1));
  std::iota(blocks.begin(), blocks.end(), 0);
  auto shape = [&](int i) {
    std::vector<Int> l = d.l[i];
    std::sort(l.begin(), l.end());
    return l;
  };
  std::vector<std::size_t> free_cols(static_cast<std::size_t>(d.m));
  std::iota(free_cols.begin(), free_cols.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i <= d.r && ok; ++i) ok = shape(i) == shape(blocks[i]);
    if (!ok) continue;
    // within-block orders: enumerate all exponent-preserving orderings
    std::vector<std::vector<std::vector<std::size_t>>> inner(blocks.size());
    for (int i = 0; i <= d.r; ++i) {
      std::vector<std::size_t> p(static_cast<std::size_t>(d.n[blocks[i]]));
      std::iota(p.begin(), p.end(), 0);
      do {
        bool good = true;
        for (std::size_t j = 0; j < p.size() && good; ++j) good = d.l[blocks[i]][p[j]] == d.l[i][j];
        if (good) inner[i].push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::size_t> pick(blocks.size(), 0);
    for (;;) {
      std::vector<std::size_t> fp = free_cols;
      do {
        std::vector<std::size_t> perm;  // perm[k] = source column for target column k
        for (int i = 0; i <= d.r; ++i)
          for (auto j : inner[i][pick[i]]) perm.push_back(d.col_index(blocks[i], static_cast<int>(j)));
        for (auto k : fp) perm.push_back(d.free_col_index(static_cast<int>(k)));
        out.push_back(std::move(perm));
      } while (std::next_permutation(fp.begin(), fp.end()));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == inner[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  } while (std::next_permutation(blocks.begin(), blocks.end()));
  return out;
}

}  // namespace detail

inline std::optional<IntMatrix> explicit_equivalence(const GavData& a, const GavData& b) {
  if (a.n != b.n || a.m != b.m || a.l != b.l || a.P.rows() != b.P.rows()) return std::nullopt;
  const std::size_t rows = a.P.rows();
  for (const auto& perm : detail::block_respecting_permutations(a)) {
    IntMatrix Pa(rows, perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
      for (std::size_t i = 0; i < rows; ++i) Pa(i, k) = a.P(i, perm[k]);
    // U * Pa = Pb, solved as Pa^T U^T = Pb^T
    auto sol_ok = true;
    IntMatrix U(rows, rows);
    for (std::size_t i = 0; i < rows && sol_ok; ++i) {
      auto s = solve_rational(to_rational(Pa.transpose()), to_rational(b.P.row(i)));
      if (!s || !s->kernel.empty()) {
        sol_ok = false;
        break;
      }
      for (std::size_t j = 0; j < rows; ++j) {
        if (s->particular[j].get_den() != 1) sol_ok = false;
        else U(i, j) = s->particular[j].get_num();
      }
    }
    if (!sol_ok) continue;
    Int det = determinant(U);
    if ((det == 1 || det == -1) && U * Pa == b.P) return U;
  }
  return std::nullopt;
}

struct QuadricClass {
  std::vector<std::size_t> members;  // indices into the accepted results
  std::size_t representative = 0;
};

struct DedupeResult {
  std::vector<QuadricClass> classes;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // same invariants, no equivalence found
};

/// Invariant grouping first, explicit equivalence second. Pairs with equal
/// invariants but no equivalence found stay separate and are reported.
inline DedupeResult dedupe(const std::vector<CandidateResult>& accepted) {
  DedupeResult out;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < accepted.size(); ++i) groups[accepted[i].invariants->key()].push_back(i);
  for (const auto& [key, idx] : groups) {
    std::vector<QuadricClass> local;
    for (auto i : idx) {
      bool placed = false;
      for (auto& c : local)
        if (explicit_equivalence(accepted[c.representative].candidate.data, accepted[i].candidate.data)) {
          c.members.push_back(i);
          placed = true;
          break;
        }
      if (!placed) local.push_back(QuadricClass{{i}, i});
    }
    for (std::size_t a = 0; a < local.size(); ++a)
      for (std::size_t b = a + 1; b < local.size(); ++b)
        out.unresolved.emplace_back(local[a].representative, local[b].representative);
    for (auto& c : local) out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const QuadricClass& a, const QuadricClass& b) { return a.representative < b.representative; });
  return out;
}

// ---------------------------------------------------------------------------

struct PicardReport {
  int max_picard = 0;
  bool within_3 = true, within_3_plus_m = true, within_5 = true;
};

struct QuadricClassification {
  std::vector<CandidateResult> results;  // every candidate, in enumeration order
  std::vector<CandidateResult> accepted;
  DedupeResult dedup;
  PicardReport picard;
  bool no_terminal = true;
};

inline QuadricClassification classify_quadrics() {
  QuadricClassification out;
  for (const auto& c : enumerate_candidates()) {
    out.results.push_back(run_pipeline(c));
    const auto& r = out.results.back();
    if (r.verdict && *r.verdict == Singularity::Terminal) out.no_terminal = false;
    if (r.accepted) out.accepted.push_back(r);
  }
  out.dedup = dedupe(out.accepted);
  for (const auto& r : out.accepted) {
    int rho = r.invariants->picard;
    out.picard.max_picard = std::max(out.picard.max_picard, rho);
    out.picard.within_3 = out.picard.within_3 && rho <= 3;
    out.picard.within_3_plus_m = out.picard.within_3_plus_m && rho <= 3 + r.candidate.data.m;
    out.picard.within_5 = out.picard.within_5 && rho <= 5;
  }
  return out;
}

/// Configuration excluded in the proof of the Picard bound: blocks (2,2,2,1)
/// and one free column, so Picard number four.
inline GavData picard_four_control() {
  GavData d;
  d.c = 2;
  d.r = 3;
  d.s = 1;
  d.n = {2, 2, 2, 1};
  d.m = 1;
  d.l = {{1, 1}, {1, 1}, {1, 1}, {2}};
  RatMatrix A(3, 4);
  for (int i = 0; i < 3; ++i) {
    A(i, i) = 1;
    A(i, 3) = -1;
  }
  d.A = A;
  d.P = IntMatrix::from_columns({{-1, -1, -1, 0},
                                 {-1, -1, -1, -1},
                                 {1, 0, 0, 0},
                                 {1, 0, 0, 1},
                                 {0, 1, 0, 0},
                                 {0, 1, 0, 1},
                                 {0, 0, 2, 1},
                                 {0, 0, 0, -1}},
                                4);
  d.ample_anticanonical = true;
  return d;
}

}  // namespace acx
