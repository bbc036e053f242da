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

#include "lars/loop.hpp"

#include <algorithm>

namespace lars {

MatrixScheme::MatrixScheme(Kind kind, std::vector<Label> labels) : kind_(kind), labels_(std::move(labels)) {
  if (labels_.empty()) throw LoopError("matrix scheme needs at least one label");
  std::set<Label> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw LoopError("duplicate labels in matrix scheme");
  if (kind_ == Kind::J) {
    names_ = labels_;
    return;
  }
  for (const auto& j : labels_) names_.push_back("+" + j);
  if (kind_ == Kind::TwoJ1) names_.emplace_back("0");
  for (const auto& j : labels_) names_.push_back("-" + j);
}

std::shared_ptr<const MatrixScheme> MatrixScheme::make(Kind kind, std::vector<Label> labels) {
  return std::make_shared<const MatrixScheme>(kind, std::move(labels));
}

MatrixScheme::Kind MatrixScheme::parse_kind(std::string_view s) {
  if (s == "J") return Kind::J;
  if (s == "2J") return Kind::TwoJ;
  if (s == "2J+1") return Kind::TwoJ1;
  throw LoopError("unknown matrix scheme " + std::string(s));
}

std::string MatrixScheme::kind_name() const {
  switch (kind_) {
    case Kind::J: return "J";
    case Kind::TwoJ: return "2J";
    case Kind::TwoJ1: return "2J+1";
  }
  return "?";
}

std::size_t MatrixScheme::slot(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw LoopError("unknown slot " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t MatrixScheme::plus(std::size_t i) const {
  if (i >= labels_.size()) throw LoopError("label index out of range");
  return i;
}

std::size_t MatrixScheme::minus(std::size_t i) const {
  if (kind_ == Kind::J) throw LoopError("scheme J has no negative slots");
  return i + labels_.size() + (kind_ == Kind::TwoJ1 ? 1 : 0);
}

std::size_t MatrixScheme::zero() const {
  if (kind_ != Kind::TwoJ1) throw LoopError("only scheme 2J+1 has a zero slot");
  return labels_.size();
}

std::size_t MatrixScheme::partner(std::size_t slot) const {
  if (kind_ == Kind::J) throw LoopError("scheme J has no slot pairing");
  const std::size_t n = labels_.size();
  if (kind_ == Kind::TwoJ1 && slot == n) return n;
  const std::size_t off = kind_ == Kind::TwoJ1 ? n + 1 : n;
  return slot < n ? slot + off : slot - off;
}

int MatrixScheme::sign(std::size_t slot) const {
  if (kind_ == Kind::J) return 1;
  return slot < labels_.size() + (kind_ == Kind::TwoJ1 ? 1 : 0) ? 1 : -1;
}

std::optional<std::size_t> MatrixScheme::label_index(std::size_t slot) const {
  const std::size_t n = labels_.size();
  if (kind_ == Kind::J || slot < n) return slot;
  if (kind_ == Kind::TwoJ1) {
    if (slot == n) return std::nullopt;
    return slot - n - 1;
  }
  return slot - n;
}

LoopMatrix LoopMatrix::unit(const SchemePtr& s, std::size_t r, std::size_t c, const Laurent& coeff) {
  LoopMatrix m(s);
  m.set(r, c, coeff);
  return m;
}

LoopMatrix LoopMatrix::identity(const SchemePtr& s) {
  LoopMatrix m(s);
  for (std::size_t i = 0; i < s->size(); ++i) m.set(i, i, Laurent(1));
  return m;
}

LoopMatrix LoopMatrix::from_dense(const SchemePtr& s, const CMatrix& d) {
  if (d.rows() != s->size() || d.cols() != s->size()) throw LoopError("dense matrix does not fit the scheme");
  LoopMatrix m(s);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero()) m.set(i, j, Laurent(d(i, j)));
  return m;
}

Laurent LoopMatrix::get(std::size_t r, std::size_t c) const {
  const auto it = entries_.find({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)});
  return it == entries_.end() ? Laurent() : it->second;
}

void LoopMatrix::set(std::size_t r, std::size_t c, const Laurent& v) {
  if (r >= scheme_->size() || c >= scheme_->size()) throw LoopError("matrix index out of range");
  const Key k{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)};
  if (v.is_zero()) {
    entries_.erase(k);
  } else {
    entries_[k] = v;
  }
}

void LoopMatrix::add(std::size_t r, std::size_t c, const Laurent& v) {
  if (v.is_zero()) return;
  if (r >= scheme_->size() || c >= scheme_->size()) throw LoopError("matrix index out of range");
  const Key k{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)};
  auto [it, inserted] = entries_.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

LoopMatrix LoopMatrix::transpose() const {
  LoopMatrix out(scheme_);
  for (const auto& [k, v] : entries_) out.entries_.emplace(Key{k.second, k.first}, v);
  return out;
}

LoopMatrix LoopMatrix::conj() const {
  return map_entries([](const Laurent& p) { return p.conj(); });
}

bool LoopMatrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

LoopMatrix LoopMatrix::degree_part(std::int64_t q) const {
  LoopMatrix out(scheme_);
  for (const auto& [k, v] : entries_) {
    const Gaussian c = v.coeff(q);
    if (!c.is_zero()) out.entries_.emplace(k, Laurent(c));
  }
  return out;
}

std::set<std::int64_t> LoopMatrix::degrees() const {
  std::set<std::int64_t> out;
  for (const auto& [k, v] : entries_)
    for (const auto& [q, c] : v.terms()) out.insert(q);
  return out;
}

CMatrix LoopMatrix::dense_constant() const {
  if (!is_constant()) throw LoopError("matrix has nonconstant entries");
  CMatrix d(scheme_->size(), scheme_->size());
  for (const auto& [k, v] : entries_) d(k.first, k.second) = v.coeff(0);
  return d;
}

Laurent LoopMatrix::trace() const {
  Laurent s;
  for (const auto& [k, v] : entries_)
    if (k.first == k.second) s += v;
  return s;
}

std::string LoopMatrix::to_string() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : entries_) {
    if (!s.empty()) s += " + ";
    s += "(" + v.to_string() + ")E(" + scheme_->name(k.first) + "," + scheme_->name(k.second) + ")";
  }
  return s;
}

void LoopMatrix::require_same(const LoopMatrix& o) const {
  if (scheme_ != o.scheme_ && !(*scheme_ == *o.scheme_)) throw LoopError("matrix scheme mismatch");
}

LoopMatrix& LoopMatrix::operator+=(const LoopMatrix& o) {
  require_same(o);
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
  return *this;
}

LoopMatrix& LoopMatrix::operator-=(const LoopMatrix& o) {
  require_same(o);
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
  return *this;
}

LoopMatrix operator*(const Laurent& s, const LoopMatrix& a) {
  LoopMatrix out(a.scheme_);
  if (s.is_zero()) return out;
  for (const auto& [k, v] : a.entries_) {
    Laurent p = s * v;
    if (!p.is_zero()) out.entries_.emplace(k, std::move(p));
  }
  return out;
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) {
  a.require_same(b);
  // Row index of b for sparse products.
  std::vector<std::vector<std::pair<std::uint32_t, const Laurent*>>> rows(a.scheme_->size());
  for (const auto& [k, v] : b.entries_) rows[k.first].emplace_back(k.second, &v);
  LoopMatrix out(a.scheme_);
  for (const auto& [k, v] : a.entries_) {
    for (const auto& [c, w] : rows[k.second]) out.add(k.first, c, v * *w);
  }
  return out;
}

LoopMatrix LoopMatrix::operator-() const {
  return map_entries([](const Laurent& p) { return -p; });
}

bool operator==(const LoopMatrix& a, const LoopMatrix& b) {
  return (a.scheme_ == b.scheme_ || *a.scheme_ == *b.scheme_) && a.entries_ == b.entries_;
}

LoopMatrix bracket(const LoopMatrix& x, const LoopMatrix& y) { return x * y - y * x; }

Gaussian loop_form(const LoopMatrix& x, const LoopMatrix& y) {
  if (!(x.scheme() == y.scheme() || *x.scheme() == *y.scheme())) throw LoopError("matrix scheme mismatch");
  // Only the diagonal of xy is needed.
  Gaussian s;
  for (const auto& [k, v] : x.entries()) {
    const auto it = y.entries().find({k.second, k.first});
    if (it == y.entries().end()) continue;
    for (const auto& [q, c] : v.terms()) s += c * it->second.coeff(-q);
  }
  return s;
}

LoopMatrix derive_D(const LoopMatrix& x) {
  return x.map_entries([](const Laurent& p) { return p.derive(); });
}

LoopMatrix structure_matrix(const SchemePtr& scheme, int sign) {
  if (scheme->kind() == MatrixScheme::Kind::J) throw LoopError("structure matrices need a signed scheme");
  LoopMatrix s(scheme);
  for (std::size_t i = 0; i < scheme->labels().size(); ++i) {
    s.set(scheme->plus(i), scheme->minus(i), Laurent(1));
    s.set(scheme->minus(i), scheme->plus(i), Laurent(sign));
  }
  if (scheme->kind() == MatrixScheme::Kind::TwoJ1) s.set(scheme->zero(), scheme->zero(), Laurent(1));
  return s;
}

AlgebraTag AlgebraTag::gl(SchemePtr scheme) { return {Kind::gl, std::move(scheme), std::nullopt}; }

AlgebraTag AlgebraTag::sl(SchemePtr scheme) { return {Kind::sl, std::move(scheme), std::nullopt}; }

AlgebraTag AlgebraTag::o_even(const std::vector<Label>& J) {
  auto s = MatrixScheme::make(MatrixScheme::Kind::TwoJ, J);
  return {Kind::o2J, s, structure_matrix(s, 1)};
}

AlgebraTag AlgebraTag::o_odd(const std::vector<Label>& J) {
  auto s = MatrixScheme::make(MatrixScheme::Kind::TwoJ1, J);
  return {Kind::o2J1, s, structure_matrix(s, 1)};
}

AlgebraTag AlgebraTag::sp(const std::vector<Label>& J) {
  auto s = MatrixScheme::make(MatrixScheme::Kind::TwoJ, J);
  return {Kind::sp, s, structure_matrix(s, -1)};
}

std::string AlgebraTag::name() const {
  const std::string sch = scheme->kind_name();
  switch (kind) {
    case Kind::gl: return "gl_" + sch;
    case Kind::sl: return "sl_" + sch;
    case Kind::o2J: return "o_2J";
    case Kind::o2J1: return "o_2J+1";
    case Kind::sp: return "sp_2J";
  }
  return "?";
}

bool member(const AlgebraTag& tag, const LoopMatrix& x) {
  if (!(x.scheme() == tag.scheme || *x.scheme() == *tag.scheme)) throw LoopError("matrix scheme mismatch");
  switch (tag.kind) {
    case AlgebraTag::Kind::gl: return true;
    case AlgebraTag::Kind::sl: return x.trace().is_zero();
    default: return (x.transpose() * *tag.S + *tag.S * x).is_zero();
  }
}

LoopMatrix constant_inverse(const LoopMatrix& m) {
  const auto inv = inverse(m.dense_constant());
  if (!inv) throw LoopError("singular structure matrix");
  return LoopMatrix::from_dense(m.scheme(), *inv);
}

InvolutionSpec InvolutionSpec::adjoint(const LoopMatrix& g) {
  LoopMatrix inv = constant_inverse(g);
  const LoopMatrix sq = g * g;
  const Laurent s = sq.get(0, 0);
  if (!(sq == s * LoopMatrix::identity(g.scheme()))) throw LoopError("Ad(g) is not an involution: g^2 is not scalar");
  return {Kind::Adjoint, g, std::move(inv)};
}

InvolutionSpec InvolutionSpec::neg_transpose(const LoopMatrix& S) {
  LoopMatrix inv = constant_inverse(S);
  if (!(S.transpose() == S) && !(S.transpose() == -S)) {
    throw LoopError("-S x^T S^-1 is not an involution: S is neither symmetric nor skew");
  }
  return {Kind::NegTransposeConj, S, std::move(inv)};
}

LoopMatrix InvolutionSpec::apply(const LoopMatrix& x) const {
  if (kind_ == Kind::Adjoint) return m_ * x * inv_;
  return -(m_ * x.transpose() * inv_);
}

LoopMatrix InvolutionSpec::apply_twisted(const LoopMatrix& x) const {
  return apply(x).map_entries([](const Laurent& p) { return p.negate_variable(); });
}

LoopMatrix apply_involution(const InvolutionSpec& sigma, const LoopMatrix& x) { return sigma.apply(x); }

bool twisted_member(const LoopMatrix& x, const InvolutionSpec& sigma, const AlgebraTag& tag) {
  if (!member(tag, x)) throw LoopError("twisted_member: input is not in " + tag.name());
  return sigma.apply_twisted(x) == x;
}

Gaussian p3(const LoopMatrix& x) {
  if (!x.is_constant()) throw LoopError("p3 needs a constant matrix");
  return (x * x * x).trace().coeff(0);
}

LoopMatrix quad_phi(const SchemePtr& scheme, const std::vector<Rational>& v, const std::vector<Rational>& x,
                    const QMatrix& beta) {
  const std::size_t n = scheme->size();
  if (v.size() != n || x.size() != n || beta.rows() != n || beta.cols() != n) {
    throw LoopError("quad_phi: dimension mismatch");
  }
  const auto form = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += a[i] * beta(i, j) * b[j];
    return s;
  };
  if (form(v, v).is_zero()) throw LoopError("quad_phi: isotropic vector v");
  if (!form(v, x).is_zero()) throw LoopError("quad_phi: x is not orthogonal to v");
  // beta(a, u) = (B^T a) . u
  std::vector<Rational> bv(n), bx(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bv[i] += beta(j, i) * v[j];
      bx[i] += beta(j, i) * x[j];
    }
  LoopMatrix out(scheme);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational e = x[r] * bv[c] - v[r] * bx[c];
      if (!e.is_zero()) out.set(r, c, Laurent(Gaussian(e)));
    }
  return out;
}

BlockSpec BlockSpec::five_block(const SchemePtr& scheme, const std::vector<std::size_t>& v1_plus,
                                const std::vector<std::size_t>& v1_minus) {
  BlockSpec b{std::vector<int>(scheme->size(), 0)};
  for (auto s : v1_plus) b.weight.at(s) = 1;
  for (auto s : v1_minus) {
    if (b.weight.at(s) != 0) throw LoopError("slot listed in both V1+ and V1-");
    b.weight.at(s) = -1;
  }
  return b;
}

LoopMatrix conjugation_iso(const LoopMatrix& xi, const BlockSpec& blocks) {
  if (blocks.weight.size() != xi.scheme()->size()) throw LoopError("block spec does not match the scheme");
  LoopMatrix out(xi.scheme());
  for (const auto& [k, v] : xi.entries()) {
    out.set(k.first, k.second, v.shift(blocks.weight[k.first] - blocks.weight[k.second]));
  }
  return out;
}

}  // namespace lars
