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
#include <string>
#include <vector>

#include <Eigen/Core>

/// Finite fields GF(p) and GF(p^d) in the power basis, plus the dense
/// vector/matrix types used for GF(p)-linear algebra throughout the library.
namespace mspread {

using Residue = std::int32_t;

template <typename Scalar>
using MatrixP = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorP = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Column vector over GF(p); entries in [0, p).
using VecP = VectorP<Residue>;
/// Dense matrix over GF(p); entries in [0, p).
using MatP = MatrixP<Residue>;

/// Coefficients lowest-degree-first.
using Poly = std::vector<Residue>;

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::int64_t n);

/// Integer power with no overflow checking; callers keep results small.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Smallest monic irreducible polynomial of degree `d` over GF(p), where
/// polynomials are ordered by the integer sum c_i * p^i.
Poly find_irreducible(Residue p, int d);

/// True iff `f` (monic, degree >= 1) has no factor of degree 1..deg/2.
bool is_irreducible(const Poly& f, Residue p);

/// Element of GF(p^d): d residues in the power basis 1, x, ..., x^{d-1}.
struct FieldElem {
  std::vector<Residue> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

class FieldCtx {
 public:
  /// GF(p) itself.
  explicit FieldCtx(Residue p);
  /// GF(p^d) with the lexicographically smallest irreducible modulus.
  FieldCtx(Residue p, int d);
  /// GF(p^d) with an explicit monic modulus of degree d.
  FieldCtx(Residue p, Poly modulus);

  Residue p() const { return p_; }
  int degree() const { return d_; }
  const Poly& modulus() const { return modulus_; }
  std::uint64_t order() const { return order_; }

  FieldElem zero() const;
  FieldElem one() const;
  /// The class of x; equals zero() only when d == 1 and the modulus is x.
  FieldElem generator_x() const;
  /// Element x^j for 0 <= j < d.
  FieldElem basis(int j) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem scale(const FieldElem& a, Residue c) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// Throws FieldError on zero.
  FieldElem inv(const FieldElem& a) const;

  bool is_zero(const FieldElem& a) const;
  bool is_valid(const FieldElem& a) const;

  /// Elements are indexed by reading the coordinate tuple (c_0, ..., c_{d-1})
  /// as a base-p numeral with c_0 most significant, so index order is the
  /// lexicographic coordinate order.
  FieldElem from_index(std::uint64_t index) const;
  std::uint64_t to_index(const FieldElem& a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const FieldElem& a) const;
  /// First element, in index order, of multiplicative order p^d - 1.
  FieldElem primitive_element() const;

 private:
  void check(const FieldElem& a) const;

  Residue p_;
  int d_;
  Poly modulus_;
  std::uint64_t order_;
};

/// Power-basis coordinates of `a`.
VecP elem_to_vec(const FieldCtx& ctx, const FieldElem& a);
FieldElem vec_to_elem(const FieldCtx& ctx, const VecP& v);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace mspread
