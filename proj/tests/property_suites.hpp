#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each suite stops at the first failing case and describes it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "acx/anticanonical.hpp"
#include "acx/arrangement.hpp"
#include "acx/lattice.hpp"
#include "acx/polyhedral.hpp"

namespace props {

using namespace acx;

struct SuiteResult {
  int cases = 0;
  std::string failure;
  bool ok() const { return failure.empty(); }
};

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline std::vector<IntVec> random_vectors(std::mt19937& rng, std::size_t n, std::size_t d, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<IntVec> out;
  while (out.size() < n) {
    IntVec v(d);
    for (auto& x : v) x = dist(rng);
    if (!detail::is_zero_vec(v)) out.push_back(v);
  }
  return out;
}

inline bool is_unimodular(const IntMatrix& m) {
  Int d = determinant(m);
  return d == 1 || d == -1;
}

#define ACX_PROP(cond, what)                                                  \
  do {                                                                        \
    if (!(cond)) {                                                            \
      res.failure = "case " + std::to_string(res.cases) + ": " + (what);       \
      return res;                                                             \
    }                                                                         \
  } while (0)

/// U M V = S, U and V unimodular, S diagonal with the divisibility chain.
inline SuiteResult smith_suite(unsigned seed = 7, int n = 500) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int it = 0; it < n; ++it, ++res.cases) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c, it % 3 == 0 ? 30 : 4);
    auto s = smith_normal_form(m);
    ACX_PROP(s.U * m * s.V == s.S, "U M V != S");
    ACX_PROP(is_unimodular(s.U) && is_unimodular(s.V), "transform not unimodular");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) ACX_PROP(i == j || s.S(i, j) == 0, "off-diagonal entry");
    auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      ACX_PROP(d[i] >= 0, "negative invariant factor");
      if (i + 1 < d.size()) {
        if (d[i] == 0) ACX_PROP(d[i + 1] == 0, "zero before nonzero");
        else ACX_PROP(d[i + 1] % d[i] == 0, "divisibility chain broken");
      }
    }
    std::size_t nz = std::count_if(d.begin(), d.end(), [](const Int& x) { return x != 0; });
    ACX_PROP(nz == rank(m), "rank mismatch");
  }
  return res;
}

/// U M = H, U unimodular, H in reduced row echelon form over Z.
inline SuiteResult hermite_suite(unsigned seed = 11, int n = 500) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int it = 0; it < n; ++it, ++res.cases) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c, it % 4 == 0 ? 50 : 5);
    auto h = hermite_normal_form(m);
    ACX_PROP(h.U * m == h.H, "U M != H");
    ACX_PROP(is_unimodular(h.U), "transform not unimodular");
    ACX_PROP(h.pivot_cols.size() == rank(m), "rank mismatch");
    for (std::size_t k = 0; k < h.pivot_cols.size(); ++k) {
      std::size_t pc = h.pivot_cols[k];
      ACX_PROP(h.H(k, pc) > 0, "pivot not positive");
      for (std::size_t j = 0; j < pc; ++j) ACX_PROP(h.H(k, j) == 0, "entry left of pivot");
      for (std::size_t i = 0; i < k; ++i) ACX_PROP(h.H(i, pc) >= 0 && h.H(i, pc) < h.H(k, pc), "entry above pivot not reduced");
      for (std::size_t i = k + 1; i < r; ++i) ACX_PROP(h.H(i, pc) == 0, "entry below pivot");
    }
    for (std::size_t i = h.pivot_cols.size(); i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) ACX_PROP(h.H(i, j) == 0, "nonzero row below the rank");
  }
  return res;
}

/// Dual involution, V to H and back, facet dimensions.
inline SuiteResult cone_suite(unsigned seed = 5, int n = 200) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dimd(1, 5), cnt(1, 7);
  for (int it = 0; it < n; ++it, ++res.cases) {
    std::size_t d = dimd(rng);
    auto gens = random_vectors(rng, cnt(rng), d, 3);
    Cone c = Cone::from_generators(d, gens);
    ACX_PROP(c.dual().dual() == c, "dual of dual differs");
    ACX_PROP(Cone::from_inequalities(d, c.facets(), c.equations()) == c, "H round trip differs");
    for (const auto& g : gens) ACX_PROP(c.contains(g), "generator outside");
    IntVec s(d, Int(0));
    for (const auto& g : gens)
      for (std::size_t i = 0; i < d; ++i) s[i] += g[i];
    ACX_PROP(c.contains(s), "sum of generators outside");
    for (const auto& f : c.facets()) {
      std::vector<IntVec> on = c.lineality();
      for (const auto& r : c.rays())
        if (dot(f, r) == 0) on.push_back(r);
      ACX_PROP(rank_of_vectors(on, d) + 1 == c.dimension(), "facet of wrong dimension");
    }
    ACX_PROP(c.dimension() == rank_of_vectors(gens, d), "dimension differs from rank");
  }
  return res;
}

/// lattice_points against a scan of the box [-5,5]^d.
inline SuiteResult lattice_point_suite(unsigned seed = 13, int n = 200) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dimd(1, 4), cnt(0, 4), off(-6, 6);
  for (int it = 0; it < n; ++it, ++res.cases) {
    std::size_t d = dimd(rng);
    std::vector<Halfspace> h;
    for (std::size_t i = 0; i < d; ++i) {
      IntVec e(d, Int(0));
      e[i] = 1;
      h.push_back({e, -5});
      e[i] = -1;
      h.push_back({e, -5});
    }
    for (auto& a : random_vectors(rng, cnt(rng), d, 3)) h.push_back({a, off(rng)});
    Polyhedron p = Polyhedron::from_inequalities(d, h);
    std::vector<IntVec> expect;
    IntVec x(d, Int(-5));
    for (;;) {
      if (std::all_of(h.begin(), h.end(), [&](const Halfspace& s) { return dot(s.a, x) >= s.b; }))
        expect.push_back(x);
      std::size_t i = 0;
      while (i < d && x[i] == 5) x[i++] = -5;
      if (i == d) break;
      ++x[i];
    }
    std::sort(expect.begin(), expect.end());
    ACX_PROP(lattice_points(p) == expect, "lattice points differ from box scan");
  }
  return res;
}

/// The combinatorial X-bar face rule against the monomial oracle on random
/// general coefficient matrices, every face of the orthant.
inline SuiteResult xbar_face_suite(unsigned seed = 17, int n = 200) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> cc(1, 3), extra(0, 2), coef(-4, 4), bs(1, 2);
  while (res.cases < n) {
    GavData d;
    d.c = cc(rng);
    d.r = std::min(5, d.c + extra(rng));
    d.s = 1;
    d.A = RatMatrix(d.c + 1, d.r + 1);
    for (std::size_t i = 0; i < d.A.rows(); ++i)
      for (std::size_t j = 0; j < d.A.cols(); ++j) d.A(i, j) = coef(rng);
    for (int i = 0; i <= d.r; ++i) d.n.push_back(bs(rng));
    d.m = 0;
    // only A and the block layout enter the face tests
    bool general = true;
    detail::for_each_subset(d.A.cols(), d.A.rows(), [&](const std::vector<std::size_t>& cols) {
      RatMatrix sub(d.A.rows(), cols.size());
      for (std::size_t i = 0; i < d.A.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = d.A(i, cols[j]);
      if (rank(sub) < cols.size()) general = false;
    });
    if (!general) continue;
    const std::size_t N = d.n_total();
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << N); ++b) {
      FaceIndex f{b};
      ACX_PROP(is_xbar_face(d, f) == is_xbar_face_oracle(d, f), "face rule disagrees with oracle");
    }
    ++res.cases;
  }
  return res;
}

/// thm3_check against the discrepancy ell/c_sigma - 1 and the sign of ell.
inline SuiteResult thm3_suite(unsigned seed = 5, int n = 500) {
  SuiteResult res;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> cc(1, 2), extra(0, 2), ex(1, 7), low(-6, 6);
  while (res.cases < n) {
    int c = cc(rng), r = c + extra(rng);
    Int prod = 1;
    std::vector<Int> l;
    for (int i = 0; i <= r; ++i) {
      l.push_back(ex(rng));
      prod *= l.back();
    }
    Int ell = (c - r) * prod, lower = 0;
    for (int i = 0; i <= r; ++i) {
      Int li = prod / l[i];
      ell += li;
      lower += li * low(rng);
    }
    if (lower == 0) continue;
    Int cs = abs(lower);
    Rat disc = make_rat(ell, cs) - 1;
    ACX_PROP(thm3_check(l, cs, r, c, SingularityBound::LogTerminal) == (ell > 0), "log terminal vs sign of ell");
    ACX_PROP(thm3_check(l, cs, r, c, SingularityBound::LogTerminal) == (disc > -1), "log terminal vs discrepancy");
    ACX_PROP(thm3_check(l, cs, r, c, SingularityBound::Canonical) == (disc >= 0), "canonical vs discrepancy");
    ACX_PROP(thm3_check(l, cs, r, c, SingularityBound::Terminal) == (disc > 0), "terminal vs discrepancy");
    // raising an exponent never raises ell / prod
    Rat a = c - r, b = c - r;
    for (int i = 0; i <= r; ++i) {
      a += make_rat(1, l[i]);
      b += make_rat(1, i == 0 ? Int(l[i] + 1) : l[i]);
    }
    ACX_PROP(b <= a, "ell not monotone in the exponents");
    ++res.cases;
  }
  return res;
}

#undef ACX_PROP

}  // namespace props
