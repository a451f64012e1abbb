#pragma once

// Exact integer and rational linear algebra: dense matrices over GMP numbers,
// Hermite and Smith normal forms, cokernels of integer matrices and
// rational linear systems.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acx {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw LatticeError("ragged matrix literal");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw LatticeError("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows_if_empty = 0) {
    return from_rows(cols, rows_if_empty).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const T& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
  }
  void add_col(std::size_t a, std::size_t b, const T& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw LatticeError("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw LatticeError("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

inline RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// n/d in lowest terms; the two-argument mpq constructor does not reduce.
inline Rat make_rat(const Int& n, const Int& d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Int lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline Int floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

inline std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

/// Divide out the content. Returns the primitive vector and the factor k
/// with v = k * primitive.
inline std::pair<IntVec, Int> make_primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw LatticeError("zero vector not primitivizable");
  IntVec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {p, g};
}

/// Scale a rational vector to the primitive integer vector on the same ray.
inline IntVec primitive_on_ray(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * den;
    w[i] = s.get_num();
  }
  return make_primitive(w).first;
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style): H = U * M with H in row echelon form,
// positive pivots and entries above each pivot reduced into [0, pivot).

struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_cols;
};

inline HermiteResult hermite_normal_form(const IntMatrix& M) {
  HermiteResult res{M, IntMatrix::identity(M.rows()), {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < H.cols() && pr < H.rows(); ++col) {
    for (;;) {
      std::size_t best = H.rows();
      std::size_t nonzero = 0;
      for (std::size_t i = pr; i < H.rows(); ++i) {
        if (H(i, col) == 0) continue;
        ++nonzero;
        if (best == H.rows() || abs(H(i, col)) < abs(H(best, col))) best = i;
      }
      if (nonzero == 0) break;
      H.swap_rows(pr, best);
      U.swap_rows(pr, best);
      if (nonzero == 1) break;
      for (std::size_t i = pr + 1; i < H.rows(); ++i) {
        if (H(i, col) == 0) continue;
        Int q = floor_div(H(i, col), H(pr, col));
        H.add_row(i, pr, -q);
        U.add_row(i, pr, -q);
      }
    }
    if (H(pr, col) == 0) continue;
    if (H(pr, col) < 0) {
      H.negate_row(pr);
      U.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Int q = floor_div(H(i, col), H(pr, col));
      if (q == 0) continue;
      H.add_row(i, pr, -q);
      U.add_row(i, pr, -q);
    }
    res.pivot_cols.push_back(col);
    ++pr;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Smith normal form: S = U * M * V, U and V unimodular, S diagonal with
// nonnegative entries d_1 | d_2 | ... (zeros last).

struct SmithResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

inline SmithResult smith_normal_form(const IntMatrix& M) {
  SmithResult res{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  const std::size_t R = S.rows(), C = S.cols();
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    bool done = false;
    for (;;) {
      std::size_t bi = R, bj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (S(i, j) != 0 && (bi == R || abs(S(i, j)) < abs(S(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == R) {
        done = true;
        break;
      }
      S.swap_rows(t, bi);
      U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      V.swap_cols(t, bj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (S(i, t) == 0) continue;
        Int q = floor_div(S(i, t), S(t, t));
        S.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (S(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (S(t, j) == 0) continue;
        Int q = floor_div(S(t, j), S(t, t));
        S.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (S(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      S.add_row(t, bad, Int(1));
      U.add_row(t, bad, Int(1));
    }
    if (done) break;
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups Z^f + Z/d_1 + ... and their elements.

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors, each >= 2, d_i | d_{i+1}

  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) os << "^" << free_rank;
      first = false;
    }
    for (const auto& d : torsion) {
      os << (first ? "" : " x ") << "Z/" << d.get_str();
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }
};

struct ClassElem {
  IntVec free;
  IntVec torsion;

  bool operator==(const ClassElem& o) const { return free == o.free && torsion == o.torsion; }
  bool operator!=(const ClassElem& o) const { return !(*this == o); }
  bool operator<(const ClassElem& o) const {
    if (free != o.free) return free < o.free;
    return torsion < o.torsion;
  }

  std::string to_string() const {
    std::string s = acx::to_string(free);
    if (!torsion.empty()) s += "+" + acx::to_string(torsion);
    return s;
  }
};

inline ClassElem normalize(const AbelianGroup& g, ClassElem e) {
  if (e.free.size() != g.free_rank || e.torsion.size() != g.torsion.size())
    throw LatticeError("class element shape does not match group");
  for (std::size_t i = 0; i < e.torsion.size(); ++i) e.torsion[i] = mod_floor(e.torsion[i], g.torsion[i]);
  return e;
}

inline ClassElem zero_class(const AbelianGroup& g) {
  return ClassElem{IntVec(g.free_rank, Int(0)), IntVec(g.torsion.size(), Int(0))};
}

inline ClassElem add(const AbelianGroup& g, const ClassElem& a, const ClassElem& b) {
  ClassElem r = a;
  for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
  for (std::size_t i = 0; i < r.torsion.size(); ++i) r.torsion[i] += b.torsion[i];
  return normalize(g, std::move(r));
}

inline ClassElem scale(const AbelianGroup& g, const ClassElem& a, const Int& k) {
  ClassElem r = a;
  for (auto& x : r.free) x *= k;
  for (auto& x : r.torsion) x *= k;
  return normalize(g, std::move(r));
}

inline ClassElem sub(const AbelianGroup& g, const ClassElem& a, const ClassElem& b) {
  return add(g, a, scale(g, b, Int(-1)));
}

inline bool is_zero(const ClassElem& e) {
  for (const auto& x : e.free)
    if (x != 0) return false;
  for (const auto& x : e.torsion)
    if (x != 0) return false;
  return true;
}

/// A surjection Z^n -> K written in the coordinates of K.
struct GradingMap {
  std::size_t domain_dim = 0;
  AbelianGroup codomain;
  IntMatrix matrix_free;     // free_rank x n
  IntMatrix matrix_torsion;  // torsion.size() x n, row i reduced mod torsion[i]

  ClassElem apply(const IntVec& x) const {
    if (x.size() != domain_dim) throw LatticeError("grading map argument has wrong length");
    ClassElem e{matrix_free * x, matrix_torsion * x};
    return normalize(codomain, std::move(e));
  }

  ClassElem column(std::size_t j) const {
    ClassElem e{matrix_free.col(j), matrix_torsion.col(j)};
    return normalize(codomain, std::move(e));
  }
};

/// The cokernel Z^rows / im(M) together with the quotient map.
inline GradingMap cokernel(const IntMatrix& M) {
  SmithResult snf = smith_normal_form(M);
  const std::size_t R = M.rows();
  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<Int> tors;
  for (std::size_t i = 0; i < R; ++i) {
    Int d = i < M.cols() ? snf.S(i, i) : Int(0);
    if (d == 0)
      free_idx.push_back(i);
    else if (d != 1) {
      tors_idx.push_back(i);
      tors.push_back(d);
    }
  }
  GradingMap q;
  q.domain_dim = R;
  q.codomain.free_rank = free_idx.size();
  q.codomain.torsion = tors;
  q.matrix_free = IntMatrix(free_idx.size(), R);
  q.matrix_torsion = IntMatrix(tors_idx.size(), R);
  for (std::size_t a = 0; a < free_idx.size(); ++a)
    for (std::size_t j = 0; j < R; ++j) q.matrix_free(a, j) = snf.U(free_idx[a], j);
  for (std::size_t a = 0; a < tors_idx.size(); ++a)
    for (std::size_t j = 0; j < R; ++j) q.matrix_torsion(a, j) = mod_floor(snf.U(tors_idx[a], j), tors[a]);
  return q;
}

// ---------------------------------------------------------------------------
// Rational linear algebra.

struct RowEchelon {
  RatMatrix R;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};

inline RowEchelon rref(RatMatrix M) {
  std::vector<std::size_t> piv;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < M.cols() && pr < M.rows(); ++c) {
    std::size_t p = pr;
    while (p < M.rows() && M(p, c) == 0) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(pr, p);
    Rat inv = 1 / M(pr, c);
    for (std::size_t j = 0; j < M.cols(); ++j) M(pr, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == pr || M(i, c) == 0) continue;
      Rat f = M(i, c);
      M.add_row(i, pr, Rat(-f));
    }
    piv.push_back(c);
    ++pr;
  }
  return {std::move(M), std::move(piv)};
}

inline std::size_t rank(const RatMatrix& M) { return rref(M).pivots.size(); }
inline std::size_t rank(const IntMatrix& M) { return rank(to_rational(M)); }

inline std::size_t rank_of_vectors(const std::vector<IntVec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(IntMatrix::from_rows(vs, dim));
}

inline Rat determinant(RatMatrix M) {
  if (M.rows() != M.cols()) throw LatticeError("determinant of non-square matrix");
  Rat det = 1;
  const std::size_t n = M.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      M.swap_rows(p, c);
      det = -det;
    }
    det *= M(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) / M(c, c);
      M.add_row(i, c, Rat(-f));
    }
  }
  return det;
}

inline Int determinant(const IntMatrix& M) { return determinant(to_rational(M)).get_num(); }

/// Basis of {x : M x = 0}.
inline std::vector<RatVec> nullspace(const RatMatrix& M) {
  RowEchelon e = rref(M);
  std::vector<bool> is_piv(M.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(M.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.R(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct RationalSolution {
  RatVec particular;
  std::vector<RatVec> kernel;
};

/// All solutions of M x = b, or nullopt if the system is inconsistent.
inline std::optional<RationalSolution> solve_rational(const RatMatrix& M, const RatVec& b) {
  if (b.size() != M.rows()) throw LatticeError("right-hand side has wrong length");
  RatMatrix aug(M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
    aug(i, M.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == M.cols()) return std::nullopt;
  RationalSolution sol;
  sol.particular.assign(M.cols(), Rat(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) sol.particular[e.pivots[k]] = e.R(k, M.cols());
  sol.kernel = nullspace(M);
  return sol;
}

/// Some x in Z^n with M x = b, or nullopt if there is none.
inline std::optional<IntVec> solve_integer(const IntMatrix& M, const IntVec& b) {
  if (b.size() != M.rows()) throw LatticeError("right-hand side has wrong length");
  SmithResult snf = smith_normal_form(M);
  IntVec ub = snf.U * b;
  IntVec y(M.cols(), Int(0));
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Int d = i < M.cols() ? snf.S(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return snf.V * y;
}

/// Canonical basis of the rational row space: reduced echelon rows scaled to
/// primitive integer vectors.
inline std::vector<IntVec> canonical_row_basis(const std::vector<IntVec>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  RowEchelon e = rref(to_rational(IntMatrix::from_rows(vs, dim)));
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.push_back(primitive_on_ray(e.R.row(k)));
  return out;
}

}  // namespace acx
