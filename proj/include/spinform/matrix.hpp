#pragma once

#include "spinform/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinform {

/// Dense exact-rational matrix, row-major. The universal carrier for
/// representations, bilinear forms and solver input in this library.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Mat(int rows, int cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows_) * cols_)
      throw std::invalid_argument("entry count does not match shape");
  }
  /// Convenience for small literals: Mat::of({{1,2},{3,4}}).
  static Mat of(std::initializer_list<std::initializer_list<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    Mat m(r, c);
    int i = 0;
    for (auto& row : rows) {
      if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged literal");
      int j = 0;
      for (int v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return is_square();
  }
  bool is_skew() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
      if (at(i, i) != 0) return false;
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != -at(j, i)) return false;
    }
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  Mat operator*(const Rational& c) const {
    Mat r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
  }
  friend Mat operator*(const Rational& c, const Mat& m) { return m * c; }

  // Most matrices in this library are signed permutations or nearly so;
  // skipping zero entries makes products effectively linear-time on them.
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rational& bkj = o.at(k, j);
          if (bkj == 0) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Rational trace() const {
    Rational t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
  }

  /// Row-major flattening as a column vector (rows*cols x 1).
  Mat vec() const {
    Mat v(rows_ * cols_, 1);
    for (size_t k = 0; k < a_.size(); ++k) v.a_[k] = a_[k];
    return v;
  }
  static Mat unvec(const Mat& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw std::invalid_argument("unvec shape");
    Mat m(rows, cols);
    for (int k = 0; k < rows * cols; ++k) m.a_[k] = v.at(k, 0);
    return m;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Kronecker product with the lexicographic index pairing
/// (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l], row index i*B.rows()+k.
/// This pairing is the one fixed convention used across the whole library.
inline Mat kronecker(const Mat& A, const Mat& B) {
  Mat r(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Rational& a = A.at(i, j);
      if (a == 0) continue;
      for (int k = 0; k < B.rows(); ++k)
        for (int l = 0; l < B.cols(); ++l) {
          const Rational& b = B.at(k, l);
          if (b == 0) continue;
          r.at(i * B.rows() + k, j * B.cols() + l) = a * b;
        }
    }
  return r;
}

namespace detail {

/// Sparse integer row: sorted (column, coefficient) pairs, coefficients
/// nonzero and with collective gcd 1 after normalize().
struct SparseRow {
  std::vector<std::pair<int, Integer>> t;

  bool empty() const { return t.empty(); }
  int head() const { return t.front().first; }
  const Integer& head_val() const { return t.front().second; }

  void normalize() {
    if (t.empty()) return;
    Integer g = 0;
    for (auto& [c, v] : t) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
      for (auto& [c, v] : t) v /= g;
    if (t.front().second < 0)
      for (auto& [c, v] : t) v = -v;
  }
};

/// r1*head_val(r2) - r2*head_val(r1), assuming equal heads; content-normalized.
inline SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  SparseRow out;
  out.t.reserve(row.t.size() + pivot.t.size());
  const Integer a = pivot.head_val();
  const Integer b = row.head_val();
  size_t i = 0, j = 0;
  while (i < row.t.size() || j < pivot.t.size()) {
    if (j == pivot.t.size() || (i < row.t.size() && row.t[i].first < pivot.t[j].first)) {
      out.t.emplace_back(row.t[i].first, a * row.t[i].second);
      ++i;
    } else if (i == row.t.size() || pivot.t[j].first < row.t[i].first) {
      out.t.emplace_back(pivot.t[j].first, -b * pivot.t[j].second);
      ++j;
    } else {
      Integer v = a * row.t[i].second - b * pivot.t[j].second;
      if (v != 0) out.t.emplace_back(row.t[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  out.normalize();
  return out;
}

/// Fraction-free row echelon form of a sparse integer system.
/// Pivot rule: process columns left to right; among rows whose current head
/// is the pivot column, the earliest-inserted row wins. Deterministic.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols), pivot_of_col_(cols, -1), buckets_(cols) {}

  void add_row(SparseRow row) {
    row.normalize();
    if (row.empty()) return;
    int h = row.head();
    rows_.push_back(std::move(row));
    buckets_[h].push_back(static_cast<int>(rows_.size()) - 1);
  }

  void run() {
    for (int col = 0; col < cols_; ++col) {
      size_t next = 0;
      while (next < buckets_[col].size()) {
        int ri = buckets_[col][next++];
        SparseRow& row = rows_[ri];
        if (row.empty() || row.head() != col) continue;  // superseded
        if (pivot_of_col_[col] < 0) {
          pivot_of_col_[col] = ri;
          continue;
        }
        SparseRow reduced = eliminate(row, rows_[pivot_of_col_[col]]);
        row.t.clear();
        if (!reduced.empty()) {
          int h = reduced.head();
          rows_.push_back(std::move(reduced));
          buckets_[h].push_back(static_cast<int>(rows_.size()) - 1);
        }
      }
      buckets_[col].clear();
    }
  }

  int rank() const { return count_pivots(); }

  /// Kernel basis, one vector per free column in ascending column order.
  /// Vectors are integral, have collective gcd 1 and positive first nonzero.
  std::vector<Mat> kernel() const {
    std::vector<int> pivcols;
    for (int c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] >= 0) pivcols.push_back(c);
    std::vector<Mat> basis;
    for (int f = 0; f < cols_; ++f) {
      if (pivot_of_col_[f] >= 0) continue;
      // back-substitution over the echelon rows, highest pivot first
      std::map<int, Rational> x;
      x[f] = 1;
      for (auto it = pivcols.rbegin(); it != pivcols.rend(); ++it) {
        int p = *it;
        if (p > f) continue;
        const SparseRow& row = rows_[pivot_of_col_[p]];
        Rational acc = 0;
        for (size_t k = 1; k < row.t.size(); ++k) {
          auto found = x.find(row.t[k].first);
          if (found != x.end() && found->second != 0) acc += Rational(row.t[k].second) * found->second;
        }
        if (acc != 0) x[p] = -acc / Rational(row.t[0].second);
      }
      basis.push_back(normalize_vector(x));
    }
    return basis;
  }

 private:
  int count_pivots() const {
    int r = 0;
    for (int c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] >= 0) ++r;
    return r;
  }

  Mat normalize_vector(const std::map<int, Rational>& x) const {
    Integer l = 1, g = 0;
    for (auto& [c, v] : x)
      if (v != 0) l = boost::multiprecision::lcm(l, den(v));
    std::map<int, Integer> ints;
    for (auto& [c, v] : x) {
      if (v == 0) continue;
      Integer iv = num(v) * (l / den(v));
      g = boost::multiprecision::gcd(g, iv);
      ints[c] = std::move(iv);
    }
    bool flip = !ints.empty() && ints.begin()->second < 0;
    Mat out(cols_, 1);
    for (auto& [c, iv] : ints) out.at(c, 0) = Rational(flip ? -iv : iv, g);
    return out;
  }

  int cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_col_;
  std::vector<std::vector<int>> buckets_;
};

/// Streaming variant of the echelon engine: rows are reduced against the
/// pivots found so far as they arrive, so only the echelon itself is ever
/// held in memory. Used for the large invariance systems, whose rows are
/// two- or three-term; the offline engine above is the one behind the
/// public kernel_basis.
class OnlineEchelon {
 public:
  explicit OnlineEchelon(int cols) : cols_(cols), pivot_of_col_(cols, -1) {}

  void insert(SparseRow row) {
    row.normalize();
    while (!row.empty()) {
      int h = row.head();
      if (pivot_of_col_[h] < 0) {
        pivot_of_col_[h] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      row = eliminate(row, rows_[pivot_of_col_[h]]);
    }
  }

  int rank() const {
    int r = 0;
    for (int c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] >= 0) ++r;
    return r;
  }

  std::vector<Mat> kernel() const {
    std::vector<int> pivcols;
    for (int c = 0; c < cols_; ++c)
      if (pivot_of_col_[c] >= 0) pivcols.push_back(c);
    std::vector<Mat> basis;
    for (int f = 0; f < cols_; ++f) {
      if (pivot_of_col_[f] >= 0) continue;
      std::map<int, Rational> x;
      x[f] = 1;
      for (auto it = pivcols.rbegin(); it != pivcols.rend(); ++it) {
        int p = *it;
        if (p > f) continue;
        const SparseRow& row = rows_[pivot_of_col_[p]];
        Rational acc = 0;
        for (size_t k = 1; k < row.t.size(); ++k) {
          auto found = x.find(row.t[k].first);
          if (found != x.end() && found->second != 0)
            acc += Rational(row.t[k].second) * found->second;
        }
        if (acc != 0) x[p] = -acc / Rational(row.t[0].second);
      }
      Integer l = 1, g = 0;
      for (auto& [c, v] : x)
        if (v != 0) l = boost::multiprecision::lcm(l, den(v));
      std::map<int, Integer> ints;
      for (auto& [c, v] : x) {
        if (v == 0) continue;
        Integer iv = num(v) * (l / den(v));
        g = boost::multiprecision::gcd(g, iv);
        ints[c] = std::move(iv);
      }
      bool flip = !ints.empty() && ints.begin()->second < 0;
      Mat out(cols_, 1);
      for (auto& [c, iv] : ints) out.at(c, 0) = Rational(flip ? -iv : iv, g);
      basis.push_back(std::move(out));
    }
    return basis;
  }

 private:
  int cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_col_;
};

/// Clear denominators of one dense row; scaling rows does not change the
/// kernel or the rank.
inline SparseRow to_sparse_row(const Mat& M, int i) {
  Integer l = 1;
  for (int j = 0; j < M.cols(); ++j)
    if (M.at(i, j) != 0) l = boost::multiprecision::lcm(l, den(M.at(i, j)));
  SparseRow r;
  for (int j = 0; j < M.cols(); ++j) {
    const Rational& v = M.at(i, j);
    if (v != 0) r.t.emplace_back(j, num(v) * (l / den(v)));
  }
  return r;
}

inline Echelon echelon_of(const Mat& M) {
  Echelon e(M.cols());
  for (int i = 0; i < M.rows(); ++i) e.add_row(to_sparse_row(M, i));
  e.run();
  return e;
}

}  // namespace detail

/// Basis of the null space {v : M v = 0}. Fraction-free elimination with the
/// leftmost-nonzero pivot rule; output vectors are deterministic, integral,
/// gcd-1 normalized with positive leading entry. Empty for trivial kernel.
inline std::vector<Mat> kernel_basis(const Mat& M) { return detail::echelon_of(M).kernel(); }

inline int rank(const Mat& M) { return detail::echelon_of(M).rank(); }

/// Rank of the span of a family of equal-shape matrices (viewed as vectors).
inline int span_rank(const std::vector<Mat>& ms) {
  if (ms.empty()) return 0;
  detail::Echelon e(ms[0].rows() * ms[0].cols());
  for (const auto& m : ms) {
    Mat v = m.vec();
    detail::SparseRow r;
    Integer l = 1;
    for (int k = 0; k < v.rows(); ++k)
      if (v.at(k, 0) != 0) l = boost::multiprecision::lcm(l, den(v.at(k, 0)));
    for (int k = 0; k < v.rows(); ++k)
      if (v.at(k, 0) != 0) r.t.emplace_back(k, num(v.at(k, 0)) * (l / den(v.at(k, 0))));
    e.add_row(std::move(r));
  }
  e.run();
  return e.rank();
}

namespace detail {

inline SparseRow row_from_coeffs(std::map<int, Rational>& coeff) {
  Integer l = 1;
  for (auto& [k, v] : coeff)
    if (v != 0) l = boost::multiprecision::lcm(l, den(v));
  SparseRow row;
  for (auto& [k, v] : coeff)
    if (v != 0) row.t.emplace_back(k, num(v) * (l / den(v)));
  return row;
}

}  // namespace detail

/// Basis of {X : X G = G X for every G in gens}, X of size d x d.
/// gens may be empty (the answer is then all of End). Deterministic.
/// Signed-permutation generators (the common case here) contribute two-term
/// rows; anything else goes through a generic dense assembly.
inline std::vector<Mat> commutant_basis(const std::vector<Mat>& gens, int d) {
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("commutant_basis: generator is not d x d");
  detail::OnlineEchelon e(d * d);
  auto var = [d](int i, int j) { return i * d + j; };
  for (const auto& g : gens) {
    // signed-permutation fast path: column c of g has its single nonzero at
    // row rowOf[c] with sign sgn[c]
    std::vector<int> rowOf(d, -1), sgn(d, 0), invRow(d, -1), invSgn(d, 0);
    bool sp = true;
    for (int c = 0; c < d && sp; ++c) {
      for (int r = 0; r < d; ++r) {
        const Rational& v = g.at(r, c);
        if (v == 0) continue;
        if (rowOf[c] >= 0 || (v != 1 && v != -1)) {
          sp = false;
          break;
        }
        rowOf[c] = r;
        sgn[c] = (v == 1) ? 1 : -1;
      }
      if (rowOf[c] < 0) sp = false;
    }
    if (sp) {
      for (int c = 0; c < d; ++c) {
        invRow[rowOf[c]] = c;
        invSgn[rowOf[c]] = sgn[c];
      }
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          // (X g)[a,b] = sgn[b] X[a, rowOf[b]], (g X)[a,b] = invSgn[a] X[invRow[a], b]
          int v1 = var(a, rowOf[b]), v2 = var(invRow[a], b);
          detail::SparseRow row;
          if (v1 == v2) {
            if (sgn[b] == invSgn[a]) continue;
            row.t.emplace_back(v1, 2 * sgn[b]);
          } else if (v1 < v2) {
            row.t.emplace_back(v1, sgn[b]);
            row.t.emplace_back(v2, -invSgn[a]);
          } else {
            row.t.emplace_back(v2, -invSgn[a]);
            row.t.emplace_back(v1, sgn[b]);
          }
          e.insert(std::move(row));
        }
      continue;
    }
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        // (X G - G X)[a,b] = sum_c X[a,c] G[c,b] - G[a,c] X[c,b]
        std::map<int, Rational> coeff;
        for (int c = 0; c < d; ++c) {
          if (g.at(c, b) != 0) coeff[var(a, c)] += g.at(c, b);
          if (g.at(a, c) != 0) coeff[var(c, b)] -= g.at(a, c);
        }
        e.insert(detail::row_from_coeffs(coeff));
      }
  }
  std::vector<Mat> out;
  for (const auto& v : e.kernel()) out.push_back(Mat::unvec(v, d, d));
  return out;
}

/// Express target as a linear combination of basis vectors (all equal shape).
/// Returns std::nullopt when target is outside the span. Requires the basis
/// family to be linearly independent.
inline std::optional<std::vector<Rational>> solve_in_span(const std::vector<Mat>& basis,
                                                          const Mat& target) {
  int n = static_cast<int>(basis.size());
  int len = target.rows() * target.cols();
  Mat sys(len, n + 1);
  for (int b = 0; b < n; ++b) {
    Mat v = basis[b].vec();
    for (int k = 0; k < len; ++k) sys.at(k, b) = v.at(k, 0);
  }
  Mat tv = target.vec();
  for (int k = 0; k < len; ++k) sys.at(k, n) = tv.at(k, 0);
  auto ker = kernel_basis(sys);
  for (const auto& kv : ker) {
    if (kv.at(n, 0) != 0) {
      std::vector<Rational> coeffs(n);
      for (int b = 0; b < n; ++b) coeffs[b] = -kv.at(b, 0) / kv.at(n, 0);
      return coeffs;
    }
  }
  if (target.is_zero()) return std::vector<Rational>(n, Rational(0));
  return std::nullopt;
}

/// Does target lie in the span of the family?
inline bool in_span(const std::vector<Mat>& family, const Mat& target) {
  if (target.is_zero()) return true;
  std::vector<Mat> with = family;
  with.push_back(target);
  return span_rank(with) == span_rank(family);
}

}  // namespace spinform
