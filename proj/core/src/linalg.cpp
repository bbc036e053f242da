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

#include "lars/linalg.hpp"

#include <algorithm>

namespace lars {

LpResult lp_feasible(const QMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw AlgebraError("right-hand side has wrong length");

  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  QMatrix t(m, width);
  std::vector<int> row_sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    row_sign[i] = b[i].sign() < 0 ? -1 : 1;
    const Rational s(row_sign[i]);
    for (std::size_t j = 0; j < n; ++j) t(i, j) = s * a(i, j);
    t(i, n + i) = Rational(1);
    t(i, width - 1) = s * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  auto cost = [n](std::size_t j) { return j >= n ? Rational(1) : Rational(0); };

  for (;;) {
    // Reduced costs r_j = c_j - sum_i c_{B_i} t_ij, Bland's rule for entering.
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < n + m && !entering; ++j) {
      Rational z;
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n && !t(i, j).is_zero()) z += t(i, j);
      }
      if ((cost(j) - z).sign() < 0) entering = j;
    }
    if (!entering) break;
    const std::size_t e = *entering;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, e).sign() <= 0) continue;
      const Rational ratio = t(i, width - 1) / t(i, e);
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded direction cannot occur in phase one
    const std::size_t r = *leave;
    const Rational inv = t(r, e).inverse();
    for (std::size_t j = 0; j < width; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t(i, e).is_zero()) continue;
      const Rational f = t(i, e);
      for (std::size_t j = 0; j < width; ++j) {
        if (!t(r, j).is_zero()) t(i, j) -= f * t(r, j);
      }
    }
    basis[r] = e;
  }

  Rational objective;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) objective += t(i, width - 1);
  }

  LpResult out;
  if (objective.is_zero()) {
    out.feasible = true;
    out.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) out.solution[basis[i]] = t(i, width - 1);
    }
    return out;
  }
  // Dual y_k = c_B B^{-1} e_k, read from the artificial columns.
  out.farkas.assign(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    Rational y;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) y += t(i, n + k);
    }
    // y^T A' <= 0 and y^T b' > 0 for the sign-normalized system; flip both.
    out.farkas[k] = -(y * Rational(row_sign[k]));
  }
  return out;
}

}  // namespace lars

namespace lars {

namespace {

std::size_t first_nonzero(const std::vector<mpz_class>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

}  // namespace

void IntegerLattice::insert(std::span<const Rational> v) {
  if (v.size() != dim_) throw AlgebraError("IntegerLattice: dimension mismatch");
  std::vector<mpz_class> w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!v[i].is_integer()) throw AlgebraError("IntegerLattice: non-integer entry " + v[i].to_string());
    w[i] = v[i].numerator();
  }
  while (true) {
    const std::size_t p = first_nonzero(w);
    if (p == dim_) return;
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return first_nonzero(r) >= p; });
    if (it == rows_.end() || first_nonzero(*it) != p) {
      if (w[p] < 0) {
        for (auto& x : w) x = -x;
      }
      rows_.insert(it, std::move(w));
      return;
    }
    auto& row = *it;
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), row[p].get_mpz_t(), w[p].get_mpz_t());
    const mpz_class a = row[p] / g;
    const mpz_class b = w[p] / g;
    std::vector<mpz_class> combined(dim_), rest(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      combined[i] = x * row[i] + y * w[i];
      rest[i] = a * w[i] - b * row[i];
    }
    if (combined[p] < 0) {
      for (auto& c : combined) c = -c;
    }
    row = std::move(combined);
    w = std::move(rest);
  }
}

std::optional<mpz_class> IntegerLattice::last_axis_generator() const {
  if (dim_ == 0 || rows_.empty()) return std::nullopt;
  const auto& last = rows_.back();
  if (first_nonzero(last) != dim_ - 1) return std::nullopt;
  return last[dim_ - 1];
}

}  // namespace lars
