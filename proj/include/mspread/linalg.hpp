// Copyright 2026 The multispread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "mspread/ff.hpp"

// Gaussian elimination over GF(p) on Eigen dense integer matrices. The pivot
// rule is fixed (leftmost column, then lowest row index) so every result is
// reproducible bit for bit.
namespace mspread {

class InconsistentSystem : public std::runtime_error {
 public:
  InconsistentSystem() : std::runtime_error("inconsistent system: target is not in the column space") {}
};

template <typename Scalar>
struct RankKernel {
  Eigen::Index rank = 0;
  std::vector<VectorP<Scalar>> kernel_basis;
};

namespace detail {

inline std::int64_t modp(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t invp(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t qt = r0 / r1;
    const std::int64_t r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    const std::int64_t s2 = s0 - qt * s1;
    s0 = s1;
    s1 = s2;
  }
  return modp(s0, p);
}

/// In-place reduced row echelon form; returns pivot columns. Elimination
/// only considers the first `ncols` columns (the rest ride along).
inline std::vector<Eigen::Index> rref_inplace(MatrixP<std::int64_t>& a, std::int64_t p, Eigen::Index ncols) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < ncols && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) a.row(row).swap(a.row(piv));
    const std::int64_t s = invp(a(row, col), p);
    a.row(row) = a.row(row).unaryExpr([&](std::int64_t x) { return modp(x * s, p); });
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const std::int64_t f = a(r, col);
      for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) = modp(a(r, c) - f * a(row, c), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Entrywise reduction into [0, p).
template <typename Derived>
MatrixP<typename Derived::Scalar> reduce_mod(const Eigen::MatrixBase<Derived>& m, Residue p) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([p](S x) { return static_cast<S>(detail::modp(static_cast<std::int64_t>(x), p)); });
}

/// M * x over GF(p).
template <typename DerivedM, typename DerivedX>
VectorP<typename DerivedM::Scalar> mul_mod(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedX>& x,
                                           Residue p) {
  using S = typename DerivedM::Scalar;
  if (m.cols() != x.rows()) throw std::invalid_argument("mul_mod: shape mismatch");
  const VectorP<std::int64_t> y = m.template cast<std::int64_t>() * x.template cast<std::int64_t>();
  return y.unaryExpr([p](std::int64_t v) { return static_cast<S>(detail::modp(v, p)); });
}

template <typename Derived>
RankKernel<typename Derived::Scalar> rank_kernel(const Eigen::MatrixBase<Derived>& m, Residue p) {
  using S = typename Derived::Scalar;
  MatrixP<std::int64_t> a = reduce_mod(m.template cast<std::int64_t>(), p);
  const auto pivots = detail::rref_inplace(a, p, a.cols());

  RankKernel<S> out;
  out.rank = static_cast<Eigen::Index>(pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorP<S> v = VectorP<S>::Zero(a.cols());
    v(f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v(pivots[r]) = static_cast<S>(detail::modp(-a(static_cast<Eigen::Index>(r), f), p));
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

template <typename Derived>
Eigen::Index rank_mod(const Eigen::MatrixBase<Derived>& m, Residue p) {
  MatrixP<std::int64_t> a = reduce_mod(m.template cast<std::int64_t>(), p);
  return static_cast<Eigen::Index>(detail::rref_inplace(a, p, a.cols()).size());
}

/// One solution of M x = s with all free variables zero. Throws
/// InconsistentSystem when s is outside the column space.
template <typename DerivedM, typename DerivedS>
VectorP<typename DerivedM::Scalar> solve_linear(const Eigen::MatrixBase<DerivedM>& m,
                                                const Eigen::MatrixBase<DerivedS>& s, Residue p) {
  using S = typename DerivedM::Scalar;
  if (s.rows() != m.rows() || s.cols() != 1) throw std::invalid_argument("solve_linear: shape mismatch");
  MatrixP<std::int64_t> a(m.rows(), m.cols() + 1);
  a.leftCols(m.cols()) = m.template cast<std::int64_t>();
  a.col(m.cols()) = s.template cast<std::int64_t>();
  a = reduce_mod(a, p);
  const auto pivots = detail::rref_inplace(a, p, m.cols());
  for (Eigen::Index r = static_cast<Eigen::Index>(pivots.size()); r < a.rows(); ++r) {
    if (a(r, m.cols()) != 0) throw InconsistentSystem();
  }
  VectorP<S> x = VectorP<S>::Zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = static_cast<S>(a(static_cast<Eigen::Index>(r), m.cols()));
  }
  return x;
}

/// Vector <-> integer code, coordinate 0 most significant; code order is
/// lexicographic order on GF(p)^m.
template <typename Derived>
std::uint64_t vec_index(const Eigen::MatrixBase<Derived>& v, Residue p) {
  std::uint64_t idx = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v(i));
  }
  return idx;
}

inline VecP vec_from_index(std::uint64_t idx, Eigen::Index m, Residue p) {
  VecP v(m);
  for (Eigen::Index i = m - 1; i >= 0; --i) {
    v(i) = static_cast<Residue>(idx % static_cast<std::uint64_t>(p));
    idx /= static_cast<std::uint64_t>(p);
  }
  return v;
}

}  // namespace mspread
