// Copyright 2026 The lars Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense exact linear algebra over Q and Q(i): row reduction, kernels,
// inverses, semidefiniteness by pivoted elimination, and an exact simplex
// for linear feasibility problems.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lars/exact.hpp"

namespace lars {

inline Rational conj_of(const Rational& x) { return x; }
inline Gaussian conj_of(const Gaussian& x) { return x.conj(); }
/// Real part, used for the (real) diagonal of hermitian matrices.
inline Rational real_of(const Rational& x) { return x; }
inline Rational real_of(const Gaussian& x) { return x.re(); }
inline Rational abs2_of(const Rational& x) { return x * x; }
inline Rational abs2_of(const Gaussian& x) { return x.norm(); }

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<T> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  [[nodiscard]] DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugate transpose (plain transpose over Q).
  [[nodiscard]] DenseMatrix adjoint() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj_of((*this)(i, j));
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("matrix shape mismatch in product");
    DenseMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
        }
      }
    return p;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend DenseMatrix operator*(const T& s, DenseMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = DenseMatrix<Rational>;
using CMatrix = DenseMatrix<Gaussian>;

/// Reduced row echelon form. Pivot entries are normalized to 1 and pivots
/// are chosen as the first nonzero entry scanning columns left to right.
template <typename T>
struct Echelon {
  DenseMatrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
};

template <typename T>
Echelon<T> row_reduce(DenseMatrix<T> m) {
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename T>
std::size_t rank(const DenseMatrix<T>& m) {
  return row_reduce(m).pivot_columns.size();
}

/// Basis of {x : m x = 0}. Each basis vector has a 1 in its free column and
/// zeros in the other free columns (canonical, deterministic).
template <typename T>
std::vector<std::vector<T>> nullspace(const DenseMatrix<T>& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) {
      v[ech.pivot_columns[k]] = -ech.reduced(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b, or nullopt when inconsistent.
template <typename T>
std::optional<std::vector<T>> solve(const DenseMatrix<T>& m, std::span<const T> b) {
  if (b.size() != m.rows()) throw AlgebraError("right-hand side has wrong length");
  DenseMatrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto ech = row_reduce(aug);
  std::vector<T> x(m.cols());
  for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) {
    const auto c = ech.pivot_columns[k];
    if (c == m.cols()) return std::nullopt;
    x[c] = ech.reduced(k, m.cols());
  }
  return x;
}

template <typename T>
std::optional<DenseMatrix<T>> inverse(const DenseMatrix<T>& m) {
  if (m.rows() != m.cols()) throw AlgebraError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto ech = row_reduce(aug);
  if (ech.pivot_columns.size() < n || ech.pivot_columns[n - 1] != n - 1) return std::nullopt;
  DenseMatrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <typename T>
T determinant(DenseMatrix<T> m) {
  if (m.rows() != m.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Outcome of the exact semidefiniteness test. On success `pivots` lists
/// the positive pivots in elimination order and `kernel_dimension` counts
/// the rows eliminated as identically zero. On failure `witness` is a set
/// of original indices whose principal minor has negative determinant
/// `witness_determinant`.
struct PsdReport {
  bool psd = false;
  std::vector<Rational> pivots;
  std::size_t kernel_dimension = 0;
  std::vector<std::size_t> witness;
  Rational witness_determinant;
};

/// Exact test of positive semidefiniteness for a symmetric (over Q) or
/// hermitian (over Q(i)) matrix by symmetric pivoting. Throws AlgebraError
/// when the input is not symmetric/hermitian.
template <typename T>
PsdReport psd_check(const DenseMatrix<T>& g) {
  const std::size_t n = g.rows();
  if (g.cols() != n) throw AlgebraError("semidefiniteness test needs a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (g(i, j) != conj_of(g(j, i))) throw AlgebraError("matrix is not hermitian");

  DenseMatrix<T> m = g;
  std::vector<bool> done(n, false);
  std::vector<std::size_t> used;
  Rational pivot_product(1);
  PsdReport rep;
  for (;;) {
    // Any negative diagonal entry of the Schur complement is a witness.
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Rational d = real_of(m(i, i));
      if (d.sign() < 0) {
        rep.witness = used;
        rep.witness.push_back(i);
        rep.witness_determinant = pivot_product * d;
        return rep;
      }
      if (d.sign() > 0 && !pick) pick = i;
    }
    if (!pick) {
      // All remaining diagonal entries vanish; any off-diagonal entry is a witness.
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (done[j] || m(i, j).is_zero()) continue;
          rep.witness = used;
          rep.witness.push_back(i);
          rep.witness.push_back(j);
          rep.witness_determinant = pivot_product * (-abs2_of(m(i, j)));
          return rep;
        }
      }
      for (std::size_t i = 0; i < n; ++i) rep.kernel_dimension += done[i] ? 0 : 1;
      rep.psd = true;
      return rep;
    }
    const std::size_t p = *pick;
    const T piv = m(p, p);
    done[p] = true;
    used.push_back(p);
    pivot_product *= real_of(piv);
    rep.pivots.push_back(real_of(piv));
    const T inv = T(1) / piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, p).is_zero()) continue;
      const T f = m(i, p) * inv;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || m(p, j).is_zero()) continue;
        m(i, j) -= f * m(p, j);
      }
    }
  }
}

/// Result of an exact feasibility problem {x >= 0 : A x = b}. When feasible,
/// `solution` satisfies the system exactly. When infeasible, `farkas` is a
/// vector y with y^T A >= 0 componentwise and y^T b < 0.
struct LpResult {
  bool feasible = false;
  std::vector<Rational> solution;
  std::vector<Rational> farkas;
};

/// Phase-one simplex with Bland's rule over exact rationals.
LpResult lp_feasible(const QMatrix& a, std::span<const Rational> b);

/// Z-span of integer vectors kept in row Hermite form: rows have strictly
/// increasing pivot columns and positive pivots.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t dim) : dim_(dim) {}

  /// Throws AlgebraError on a non-integer entry or a length mismatch.
  void insert(std::span<const Rational> v);
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }
  /// Positive generator g of the lattice intersected with the last
  /// coordinate axis (g e_last), or nullopt when the intersection is zero.
  [[nodiscard]] std::optional<mpz_class> last_axis_generator() const;

 private:
  std::size_t dim_;
  std::vector<std::vector<mpz_class>> rows_;
};

}  // namespace lars
