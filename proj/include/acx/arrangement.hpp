#pragma once

// General arrangement varieties X(A,P,Sigma): the defining data, the Cox ring
// relations and grading, orthant faces and the divisor class cones derived
// from them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "acx/lattice.hpp"
#include "acx/polyhedral.hpp"

namespace acx {

/// The input does not describe a valid variety.
class InvalidDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query was made on a variety lacking the required property.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GavData {
  int c = 0;
  int r = 0;
  int s = 0;
  std::vector<int> n;               // block sizes n_0..n_r
  int m = 0;                        // number of free columns v_1..v_m
  std::vector<std::vector<Int>> l;  // exponents l_ij
  RatMatrix A;                      // (c+1) x (r+1)
  IntMatrix P;                      // (r+s) x (n+m)

  // Either a fan given by maximal cones (0-based column indices of P) or an
  // ample class selecting the model. ample_anticanonical asks for -K.
  std::optional<std::vector<std::vector<std::size_t>>> sigma_max;
  std::optional<ClassElem> ample;
  bool ample_anticanonical = false;

  std::size_t n_total() const {
    std::size_t t = 0;
    for (int x : n) t += static_cast<std::size_t>(x);
    return t;
  }
  std::size_t num_cols() const { return n_total() + static_cast<std::size_t>(m); }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(r + s); }

  std::size_t col_index(int i, int j) const {
    std::size_t k = 0;
    for (int a = 0; a < i; ++a) k += static_cast<std::size_t>(n[a]);
    return k + static_cast<std::size_t>(j);
  }
  std::size_t free_col_index(int k) const { return n_total() + static_cast<std::size_t>(k); }

  /// Block of column k, or -1 for the columns v_1..v_m.
  int block_of(std::size_t k) const {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      acc += static_cast<std::size_t>(n[i]);
      if (k < acc) return static_cast<int>(i);
    }
    return -1;
  }
  int pos_in_block(std::size_t k) const {
    int i = block_of(k);
    if (i < 0) return static_cast<int>(k - n_total());
    return static_cast<int>(k - col_index(i, 0));
  }
  const Int& exponent(std::size_t k) const {
    int i = block_of(k);
    if (i < 0) throw InvalidDataError("free columns carry no exponent");
    return l[i][pos_in_block(k)];
  }

  IntVec column(std::size_t k) const { return P.col(k); }
  std::vector<IntVec> columns() const {
    std::vector<IntVec> out;
    for (std::size_t k = 0; k < num_cols(); ++k) out.push_back(P.col(k));
    return out;
  }

  /// v01, v02, v11, ... for block columns and v1, v2, ... for the others.
  std::string column_label(std::size_t k) const {
    int i = block_of(k);
    int j = pos_in_block(k) + 1;
    if (i < 0) return "v" + std::to_string(j);
    if (i < 10 && j < 10) return "v" + std::to_string(i) + std::to_string(j);
    return "v" + std::to_string(i) + "," + std::to_string(j);
  }
};

struct Violation {
  std::string condition;
  std::string witness;
};

inline std::string describe(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "; " : "") << vs[i].condition << ": " << vs[i].witness;
  return os.str();
}

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline std::string index_set(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace detail

inline std::vector<Violation> validate(const GavData& d) {
  std::vector<Violation> out;
  auto fail = [&](std::string c, std::string w) { out.push_back({std::move(c), std::move(w)}); };
  if (d.c < 1 || d.r < d.c) fail("integers", "need r >= c > 0, got c=" + std::to_string(d.c) + " r=" + std::to_string(d.r));
  if (d.s < 0 || d.m < 0) fail("integers", "s and m must be nonnegative");
  if (!out.empty()) return out;
  if (d.n.size() != static_cast<std::size_t>(d.r + 1)) fail("blocks", "expected r+1 block sizes");
  for (int x : d.n)
    if (x < 1) fail("blocks", "block sizes must be positive");
  if (d.l.size() != d.n.size()) {
    fail("exponents", "expected one exponent list per block");
  } else {
    for (std::size_t i = 0; i < d.n.size(); ++i) {
      if (d.l[i].size() != static_cast<std::size_t>(d.n[i]))
        fail("exponents", "block " + std::to_string(i) + " has " + std::to_string(d.l[i].size()) + " exponents");
      for (const auto& e : d.l[i])
        if (e < 1) fail("exponents", "exponents must be positive");
    }
  }
  if (d.A.rows() != static_cast<std::size_t>(d.c + 1) || d.A.cols() != static_cast<std::size_t>(d.r + 1))
    fail("shape of A", "expected (c+1) x (r+1)");
  if (!out.empty()) return out;
  if (d.P.rows() != d.ambient_dim() || d.P.cols() != d.num_cols()) {
    fail("shape of P", "expected (r+s) x (n+m) = " + std::to_string(d.ambient_dim()) + "x" + std::to_string(d.num_cols()));
    return out;
  }

  detail::for_each_subset(static_cast<std::size_t>(d.r + 1), static_cast<std::size_t>(d.c + 1),
                          [&](const std::vector<std::size_t>& cols) {
                            RatMatrix sub(d.A.rows(), cols.size());
                            for (std::size_t i = 0; i < d.A.rows(); ++i)
                              for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = d.A(i, cols[j]);
                            if (rank(sub) < cols.size()) fail("A not in general position", "columns " + detail::index_set(cols) + " dependent");
                          });

  // upper block rows: (-l_0 | l_1 | ... ) pattern, zero under the free columns
  for (int t = 0; t < d.r; ++t) {
    for (std::size_t k = 0; k < d.num_cols(); ++k) {
      int i = d.block_of(k);
      Int expect = 0;
      if (i == 0) expect = -d.exponent(k);
      if (i == t + 1) expect = d.exponent(k);
      if (d.P(t, k) != expect)
        fail("block pattern of P", "row " + std::to_string(t + 1) + " at " + d.column_label(k) + " is " +
                                       d.P(t, k).get_str() + ", expected " + expect.get_str());
    }
  }
  auto cols = d.columns();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (content(cols[k]) != 1) fail("column not primitive", d.column_label(k) + " = " + to_string(cols[k]));
    for (std::size_t j = k + 1; j < cols.size(); ++j)
      if (cols[k] == cols[j]) fail("columns coincide", d.column_label(k) + " = " + d.column_label(j) + " = " + to_string(cols[k]));
  }
  if (rank_of_vectors(cols, d.ambient_dim()) != d.ambient_dim()) fail("columns do not span", "rank below r+s");

  if (d.sigma_max) {
    for (const auto& sc : *d.sigma_max)
      for (auto k : sc)
        if (k >= d.num_cols()) fail("fan", "ray index " + std::to_string(k) + " out of range (0-based, " + std::to_string(d.num_cols()) + " columns)");
  }
  return out;
}

inline void require_valid(const GavData& d) {
  auto v = validate(d);
  if (!v.empty()) throw InvalidDataError(describe(v));
}

// ---------------------------------------------------------------------------

struct Term {
  Rat coeff;
  IntVec exponent;  // in Z^{n+m}
};

struct Relation {
  int t = 0;
  std::vector<Term> terms;
};

inline IntVec block_monomial(const GavData& d, int i) {
  IntVec e(d.num_cols(), Int(0));
  for (int j = 0; j < d.n[i]; ++j) e[d.col_index(i, j)] = d.l[i][j];
  return e;
}

/// The r-c relations g_t obtained by expanding the determinant with rows the
/// columns a_0..a_c, a_{c+t} of A and the monomials T_i^{l_i}.
inline std::vector<Relation> relations(const GavData& d) {
  require_valid(d);
  std::vector<Relation> out;
  for (int t = 1; t <= d.r - d.c; ++t) {
    std::vector<int> sel;
    for (int i = 0; i <= d.c; ++i) sel.push_back(i);
    sel.push_back(d.c + t);
    Relation rel{t, {}};
    for (std::size_t p = 0; p < sel.size(); ++p) {
      RatMatrix minor(d.A.rows(), d.A.rows());
      std::size_t col = 0;
      for (std::size_t q = 0; q < sel.size(); ++q) {
        if (q == p) continue;
        for (std::size_t i = 0; i < d.A.rows(); ++i) minor(i, col) = d.A(i, sel[q]);
        ++col;
      }
      Rat coeff = determinant(minor);
      if ((d.c + 1 + static_cast<int>(p)) % 2 != 0) coeff = -coeff;
      rel.terms.push_back(Term{coeff, block_monomial(d, sel[p])});
    }
    out.push_back(std::move(rel));
  }
  return out;
}

inline std::string format_relation(const GavData& d, const Relation& rel) {
  std::ostringstream os;
  bool first = true;
  for (const auto& term : rel.terms) {
    Rat c = term.coeff;
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    bool any = false;
    for (std::size_t k = 0; k < term.exponent.size(); ++k) {
      if (term.exponent[k] == 0) continue;
      std::string lab = d.column_label(k);
      os << (any ? "*" : "") << "T" << lab.substr(1);
      if (term.exponent[k] != 1) os << "^" << term.exponent[k].get_str();
      any = true;
    }
    if (!any) os << "1";
    first = false;
  }
  return first ? "0" : os.str();
}

struct GradingData {
  GradingMap Q;
  std::vector<ClassElem> generator_degrees;
  std::vector<ClassElem> relation_degrees;
};

inline GradingData degrees(const GavData& d) {
  require_valid(d);
  GradingData g{cokernel(d.P.transpose()), {}, {}};
  // orient the free coordinates so that the generators have positive total degree
  for (std::size_t a = 0; a < g.Q.codomain.free_rank; ++a) {
    Int sum = 0;
    for (std::size_t k = 0; k < d.num_cols(); ++k) sum += g.Q.matrix_free(a, k);
    if (sum < 0) g.Q.matrix_free.negate_row(a);
  }
  for (std::size_t k = 0; k < d.num_cols(); ++k) g.generator_degrees.push_back(g.Q.column(k));
  for (const auto& rel : relations(d)) {
    std::optional<ClassElem> deg;
    for (const auto& term : rel.terms) {
      ClassElem e = g.Q.apply(term.exponent);
      if (deg && *deg != e) throw InvalidDataError("relation is not homogeneous");
      deg = e;
    }
    g.relation_degrees.push_back(*deg);
  }
  return g;
}

/// -K_X = sum of generator degrees minus sum of relation degrees.
inline ClassElem anticanonical_class(const GavData& d) {
  GradingData g = degrees(d);
  ClassElem k = zero_class(g.Q.codomain);
  for (const auto& w : g.generator_degrees) k = add(g.Q.codomain, k, w);
  for (const auto& w : g.relation_degrees) k = sub(g.Q.codomain, k, w);
  return k;
}

/// A lift of -K_X to Z^{n+m}: (1,...,1) minus one exponent vector per relation.
inline IntVec anticanonical_lift(const GavData& d) {
  IntVec x(d.num_cols(), Int(1));
  for (const auto& rel : relations(d)) {
    const IntVec& e = rel.terms.front().exponent;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= e[k];
  }
  return x;
}

// ---------------------------------------------------------------------------
// Faces of the positive orthant in Q^{n+m}.

struct FaceIndex {
  std::uint64_t bits = 0;  // generators e_k present in the face

  bool contains(std::size_t k) const { return (bits >> k) & 1u; }
  std::vector<std::size_t> members(std::size_t total) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < total; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }
  /// Indices of the generators not in the face; these span P(gamma_0^*).
  std::vector<std::size_t> complement(std::size_t total) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < total; ++k)
      if (!contains(k)) out.push_back(k);
    return out;
  }
  static FaceIndex from_members(const std::vector<std::size_t>& ks) {
    FaceIndex f;
    for (auto k : ks) f.bits |= std::uint64_t(1) << k;
    return f;
  }
  static FaceIndex from_complement(const std::vector<std::size_t>& ks, std::size_t total) {
    FaceIndex f;
    f.bits = total == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << total) - 1;
    for (auto k : ks) f.bits &= ~(std::uint64_t(1) << k);
    return f;
  }
  bool operator==(const FaceIndex& o) const { return bits == o.bits; }
  bool operator<(const FaceIndex& o) const { return bits < o.bits; }
};

/// Blocks i with some variable T_ij missing from the face.
inline std::vector<int> missing_blocks(const GavData& d, const FaceIndex& f) {
  std::vector<int> J;
  for (int i = 0; i <= d.r; ++i)
    for (int j = 0; j < d.n[i]; ++j)
      if (!f.contains(d.col_index(i, j))) {
        J.push_back(i);
        break;
      }
  return J;
}

/// Combinatorial rule: the orbit of the face meets the total coordinate
/// space iff at most c blocks have a vanishing monomial, or all of them do.
inline bool is_xbar_face(const GavData& d, const FaceIndex& f) {
  auto J = missing_blocks(d, f);
  return J.size() <= static_cast<std::size_t>(d.c) || J.size() == static_cast<std::size_t>(d.r + 1);
}

/// Exact decision: the monomial values z = (T_0^{l_0},...,T_r^{l_r}) of a
/// point of X-bar range over the row space of A. The orbit meets X-bar iff
/// the subspace {z in row(A) : z_j = 0, j in J} has no further coordinate
/// vanishing identically.
inline bool is_xbar_face_oracle(const GavData& d, const FaceIndex& f) {
  auto J = missing_blocks(d, f);
  const std::size_t rows = d.A.rows();
  // y^T A_J = 0
  RatMatrix AJt(J.size(), rows);
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t i = 0; i < rows; ++i) AJt(a, i) = d.A(i, J[a]);
  std::vector<RatVec> ys;
  if (J.empty()) {
    for (std::size_t i = 0; i < rows; ++i) {
      RatVec e(rows, Rat(0));
      e[i] = 1;
      ys.push_back(e);
    }
  } else {
    ys = nullspace(AJt);
  }
  for (int i = 0; i <= d.r; ++i) {
    if (std::find(J.begin(), J.end(), i) != J.end()) continue;
    bool vanishes = true;
    for (const auto& y : ys) {
      Rat z = 0;
      for (std::size_t a = 0; a < rows; ++a) z += y[a] * d.A(a, i);
      if (z != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return false;
  }
  return true;
}

/// X-bar faces, with the rule checked against the oracle on every face.
inline std::vector<FaceIndex> xbar_faces(const GavData& d) {
  const std::size_t N = d.num_cols();
  if (N > 24) throw PreconditionError("too many generators for orthant face enumeration");
  std::vector<FaceIndex> out;
  for (std::uint64_t b = 0; b < (std::uint64_t(1) << N); ++b) {
    FaceIndex f{b};
    bool rule = is_xbar_face(d, f);
    if (rule != is_xbar_face_oracle(d, f))
      throw std::logic_error("face rule and exact face oracle disagree on face " +
                             detail::index_set(f.members(N)));
    if (rule) out.push_back(f);
  }
  return out;
}

inline RatVec free_part(const ClassElem& e) { return to_rational(e.free); }

/// The cone Q(gamma_0) in K_Q spanned by the free parts of the degrees.
inline Cone degree_cone(const GradingData& g, const FaceIndex& f) {
  std::vector<IntVec> gens;
  for (std::size_t k = 0; k < g.generator_degrees.size(); ++k)
    if (f.contains(k)) {
      const IntVec& w = g.generator_degrees[k].free;
      if (!detail::is_zero_vec(w)) gens.push_back(w);
    }
  return Cone::from_generators(g.Q.codomain.free_rank, gens);
}

/// X-bar faces whose degree cone has u in its relative interior.
inline std::vector<FaceIndex> x_faces(const GavData& d, const ClassElem& u) {
  GradingData g = degrees(d);
  if (u.free.size() != g.Q.codomain.free_rank) throw InvalidDataError("class has wrong free rank");
  RatVec uf = free_part(u);
  std::vector<FaceIndex> out;
  for (const auto& f : xbar_faces(d))
    if (degree_cone(g, f).in_relative_interior(uf)) out.push_back(f);
  return out;
}

inline Fan fan_with_cones(const GavData& d, std::vector<std::vector<std::size_t>> cones) {
  for (auto& c : cones) std::sort(c.begin(), c.end());
  std::sort(cones.begin(), cones.end());
  return Fan{d.ambient_dim(), d.columns(), std::move(cones)};
}

/// The fan of the model defined by the ample class u: maximal cones are the
/// inclusion-maximal P(gamma_0^*) over the X-faces gamma_0.
inline Fan fan_from_ample(const GavData& d, const ClassElem& u) {
  GradingData g = degrees(d);
  Cone eff = degree_cone(g, FaceIndex::from_complement({}, d.num_cols()));
  if (!eff.contains(free_part(u))) throw PreconditionError("class not ample for any model: outside the effective cone");
  auto xf = x_faces(d, u);
  if (xf.empty()) throw PreconditionError("class not ample for any model");
  std::vector<std::vector<std::size_t>> comps;
  for (const auto& f : xf) comps.push_back(f.complement(d.num_cols()));
  std::vector<std::vector<std::size_t>> maximal;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < comps.size() && !dominated; ++j)
      if (i != j && comps[j].size() > comps[i].size() &&
          std::includes(comps[j].begin(), comps[j].end(), comps[i].begin(), comps[i].end()))
        dominated = true;
    if (!dominated) maximal.push_back(comps[i]);
  }
  return fan_with_cones(d, maximal);
}

/// The fan of the model described by the data.
inline Fan model_fan(const GavData& d) {
  require_valid(d);
  if (d.sigma_max) return fan_with_cones(d, *d.sigma_max);
  if (d.ample_anticanonical) return fan_from_ample(d, anticanonical_class(d));
  if (d.ample) return fan_from_ample(d, *d.ample);
  throw InvalidDataError("no fan and no ample class given");
}

/// X-bar faces whose complementary rays span a cone of the fan.
inline std::vector<FaceIndex> x_faces_of_fan(const GavData& d, const Fan& fan) {
  auto cones = fan.all_cones();
  std::set<std::vector<std::size_t>> cs(cones.begin(), cones.end());
  std::vector<FaceIndex> out;
  for (const auto& f : xbar_faces(d))
    if (cs.count(f.complement(d.num_cols()))) out.push_back(f);
  return out;
}

struct DivisorCones {
  Cone eff;
  Cone semiample;
  std::vector<Cone> x_face_cones;  // Ample is the intersection of their relative interiors

  bool is_ample(const ClassElem& u) const {
    RatVec uf = free_part(u);
    for (const auto& c : x_face_cones)
      if (!c.in_relative_interior(uf)) return false;
    return !x_face_cones.empty();
  }
};

inline DivisorCones divisor_cones(const GavData& d, const Fan& fan) {
  GradingData g = degrees(d);
  const std::size_t f = g.Q.codomain.free_rank;
  DivisorCones out{degree_cone(g, FaceIndex::from_complement({}, d.num_cols())), Cone::whole_space(f), {}};
  for (const auto& face : x_faces_of_fan(d, fan)) {
    out.x_face_cones.push_back(degree_cone(g, face));
    out.semiample = out.semiample.intersect(out.x_face_cones.back());
  }
  return out;
}

inline DivisorCones divisor_cones(const GavData& d) { return divisor_cones(d, model_fan(d)); }

inline bool is_q_factorial(const GavData& d, const Fan& fan) {
  GradingData g = degrees(d);
  for (const auto& face : x_faces_of_fan(d, fan))
    if (!degree_cone(g, face).is_full_dimensional()) return false;
  return true;
}
inline bool is_q_factorial(const GavData& d) { return is_q_factorial(d, model_fan(d)); }

inline bool is_fano(const GavData& d, const Fan& fan) {
  return divisor_cones(d, fan).is_ample(anticanonical_class(d));
}
inline bool is_fano(const GavData& d) { return is_fano(d, model_fan(d)); }

inline int picard_number(const GavData& d, const Fan& fan) {
  if (!is_q_factorial(d, fan)) throw PreconditionError("Picard number requested for a variety that is not Q-factorial");
  GradingData g = degrees(d);
  std::size_t rho = g.Q.codomain.free_rank;
  if (rho != d.num_cols() - d.ambient_dim()) throw std::logic_error("free rank of K differs from n+m-(r+s)");
  return static_cast<int>(rho);
}
inline int picard_number(const GavData& d) { return picard_number(d, model_fan(d)); }

/// Largest q such that w = q * v for some v in the group.
inline Int divisibility(const AbelianGroup& grp, const ClassElem& w) {
  Int g = content(w.free);
  if (g == 0) throw PreconditionError("divisibility of a class with vanishing free part");
  for (Int q = g; q >= 1; --q) {
    if (g % q != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < grp.torsion.size() && ok; ++i)
      if (w.torsion[i] % gcd(q, grp.torsion[i]) != 0) ok = false;
    if (ok) return q;
  }
  return 1;
}

inline Int fano_index(const GavData& d, const Fan& fan) {
  if (!is_fano(d, fan)) throw PreconditionError("Fano index requested for a variety that is not Fano");
  return divisibility(degrees(d).Q.codomain, anticanonical_class(d));
}
inline Int fano_index(const GavData& d) { return fano_index(d, model_fan(d)); }

/// Smallest k with k * K_X Cartier, i.e. k * (-K_X) in Q(lin(gamma_0) cap Z^{n+m})
/// for every X-face; nullopt if K_X is not Q-Cartier.
inline std::optional<Int> gorenstein_index(const GavData& d, const Fan& fan) {
  IntVec x = anticanonical_lift(d);
  IntMatrix Pt = d.P.transpose();
  Int index = 1;
  for (const auto& face : x_faces_of_fan(d, fan)) {
    auto mem = face.members(d.num_cols());
    IntMatrix M(d.num_cols(), mem.size() + Pt.cols());
    for (std::size_t a = 0; a < mem.size(); ++a) M(mem[a], a) = 1;
    for (std::size_t i = 0; i < Pt.rows(); ++i)
      for (std::size_t j = 0; j < Pt.cols(); ++j) M(i, mem.size() + j) = Pt(i, j);
    GradingMap loc = cokernel(M);
    ClassElem e = loc.apply(x);
    if (!detail::is_zero_vec(e.free)) return std::nullopt;
    for (std::size_t i = 0; i < e.torsion.size(); ++i) {
      Int dd = loc.codomain.torsion[i];
      index = lcm(index, dd / gcd(dd, e.torsion[i]));
    }
  }
  return index;
}

// ---------------------------------------------------------------------------
// Graded components.

/// {x in Q^{n+m}_{>=0} : Q_free(x) = w_free}.
inline Polyhedron fiber_polytope(const GradingMap& q, const ClassElem& w) {
  const std::size_t N = q.domain_dim;
  std::vector<Halfspace> in, eq;
  for (std::size_t k = 0; k < N; ++k) {
    IntVec e(N, Int(0));
    e[k] = 1;
    in.push_back({e, 0});
  }
  for (std::size_t a = 0; a < q.codomain.free_rank; ++a) eq.push_back({q.matrix_free.row(a), w.free[a]});
  return Polyhedron::from_inequalities(N, in, eq);
}

/// Number of monomials of degree w; nullopt if infinite.
inline std::optional<Int> monomial_count(const GradingMap& q, const ClassElem& w) {
  Polyhedron p = fiber_polytope(q, w);
  if (p.is_empty()) return Int(0);
  if (!p.is_bounded()) return std::nullopt;
  Int count = 0;
  for (const auto& x : lattice_points(p))
    if (q.apply(x) == w) ++count;
  return count;
}

/// dim R(A,P)_w; nullopt means infinite.
inline std::optional<Int> graded_component_dim(const GavData& d, const ClassElem& w) {
  if (d.r - d.c > 1) throw PreconditionError("only principal ideals supported");
  GradingData g = degrees(d);
  auto total = monomial_count(g.Q, w);
  if (!total) return std::nullopt;
  if (g.relation_degrees.empty()) return total;
  auto shifted = monomial_count(g.Q, sub(g.Q.codomain, w, g.relation_degrees.front()));
  if (!shifted) return std::nullopt;
  return *total - *shifted;
}

}  // namespace acx
