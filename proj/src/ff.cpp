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

#include "mspread/ff.hpp"

#include <algorithm>
#include <utility>

namespace mspread {

namespace {

Residue mod(std::int64_t a, Residue p) {
  auto r = static_cast<Residue>(a % p);
  return r < 0 ? r + p : r;
}

Residue inv_mod(Residue a, Residue p) {
  // Extended Euclid on (a, p); p prime so gcd is 1 for a != 0.
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
  }
  return mod(s0, p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_rem(Poly f, const Poly& g, Residue p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const Residue lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = mod(f[shift + i] - static_cast<std::int64_t>(lead) * g[i], p);
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of `n`, least significant first.
Poly monic_from_index(std::uint64_t n, int d, Residue p) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<Residue>(n % static_cast<std::uint64_t>(p));
    n /= static_cast<std::uint64_t>(p);
  }
  f[static_cast<std::size_t>(d)] = 1;
  return f;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const Poly& f, Residue p) {
  if (f.size() < 2 || f.back() != 1) throw FieldError("is_irreducible: expected a monic polynomial of degree >= 1");
  const int deg = static_cast<int>(f.size()) - 1;
  for (int dg = 1; dg <= deg / 2; ++dg) {
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(dg));
    for (std::uint64_t n = 0; n < count; ++n) {
      if (poly_rem(f, monic_from_index(n, dg, p), p).empty()) return false;
    }
  }
  return true;
}

Poly find_irreducible(Residue p, int d) {
  if (!is_prime(p)) throw FieldError("find_irreducible: p = " + std::to_string(p) + " is not prime");
  if (d < 1) throw FieldError("find_irreducible: degree must be >= 1");
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d));
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f = monic_from_index(n, d, p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

FieldCtx::FieldCtx(Residue p) : FieldCtx(p, 1) {}

FieldCtx::FieldCtx(Residue p, int d) : FieldCtx(p, find_irreducible(p, d)) {}

FieldCtx::FieldCtx(Residue p, Poly modulus) : p_(p), d_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw FieldError("FieldCtx: p = " + std::to_string(p_) + " is not prime");
  if (d_ < 1 || modulus_.back() != 1) throw FieldError("FieldCtx: modulus must be monic of degree >= 1");
  for (Residue c : modulus_) {
    if (c < 0 || c >= p_) throw FieldError("FieldCtx: modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, p_)) throw FieldError("FieldCtx: modulus is reducible");
  order_ = ipow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(d_));
}

FieldElem FieldCtx::zero() const { return FieldElem{std::vector<Residue>(static_cast<std::size_t>(d_), 0)}; }

FieldElem FieldCtx::one() const {
  FieldElem e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElem FieldCtx::generator_x() const {
  if (d_ == 1) return FieldElem{{mod(-modulus_[0], p_)}};
  return basis(1);
}

FieldElem FieldCtx::basis(int j) const {
  if (j < 0 || j >= d_) throw FieldError("FieldCtx::basis: index out of range");
  FieldElem e = zero();
  e.coeffs[static_cast<std::size_t>(j)] = 1;
  return e;
}

void FieldCtx::check(const FieldElem& a) const {
  if (!is_valid(a)) throw FieldError("FieldElem does not belong to this field");
}

bool FieldCtx::is_valid(const FieldElem& a) const {
  if (a.coeffs.size() != static_cast<std::size_t>(d_)) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [this](Residue c) { return c >= 0 && c < p_; });
}

bool FieldCtx::is_zero(const FieldElem& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Residue c) { return c == 0; });
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = mod(r.coeffs[i] + b.coeffs[i], p_);
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  check(a);
  FieldElem r = a;
  for (auto& c : r.coeffs) c = mod(-c, p_);
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldCtx::scale(const FieldElem& a, Residue c) const {
  check(a);
  FieldElem r = a;
  for (auto& x : r.coeffs) x = mod(static_cast<std::int64_t>(x) * c, p_);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  Poly prod(2 * static_cast<std::size_t>(d_) - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      prod[i + j] = mod(prod[i + j] + static_cast<std::int64_t>(a.coeffs[i]) * b.coeffs[j], p_);
    }
  }
  Poly rem = poly_rem(std::move(prod), modulus_, p_);
  FieldElem r = zero();
  std::copy(rem.begin(), rem.end(), r.coeffs.begin());
  return r;
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
  check(a);
  FieldElem r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  check(a);
  if (is_zero(a)) throw FieldError("inversion of zero");
  if (d_ == 1) return FieldElem{{inv_mod(a.coeffs[0], p_)}};
  return pow(a, order_ - 2);
}

FieldElem FieldCtx::from_index(std::uint64_t index) const {
  if (index >= order_) throw FieldError("FieldCtx::from_index: index out of range");
  FieldElem e = zero();
  for (int i = d_ - 1; i >= 0; --i) {
    e.coeffs[static_cast<std::size_t>(i)] = static_cast<Residue>(index % static_cast<std::uint64_t>(p_));
    index /= static_cast<std::uint64_t>(p_);
  }
  return e;
}

std::uint64_t FieldCtx::to_index(const FieldElem& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (Residue c : a.coeffs) idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(c);
  return idx;
}

std::uint64_t FieldCtx::multiplicative_order(const FieldElem& a) const {
  if (is_zero(a)) throw FieldError("multiplicative order of zero");
  const std::uint64_t group = order_ - 1;
  std::uint64_t ord = group;
  for (std::uint64_t r : prime_factors(group)) {
    while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
  }
  return ord;
}

FieldElem FieldCtx::primitive_element() const {
  for (std::uint64_t i = 1; i < order_; ++i) {
    FieldElem g = from_index(i);
    if (multiplicative_order(g) == order_ - 1) return g;
  }
  throw std::logic_error("primitive_element: none found");
}

VecP elem_to_vec(const FieldCtx& ctx, const FieldElem& a) {
  if (!ctx.is_valid(a)) throw FieldError("elem_to_vec: element does not belong to the field");
  VecP v(ctx.degree());
  for (int i = 0; i < ctx.degree(); ++i) v(i) = a.coeffs[static_cast<std::size_t>(i)];
  return v;
}

FieldElem vec_to_elem(const FieldCtx& ctx, const VecP& v) {
  if (v.size() != ctx.degree()) throw FieldError("vec_to_elem: length mismatch");
  FieldElem e{std::vector<Residue>(v.data(), v.data() + v.size())};
  if (!ctx.is_valid(e)) throw FieldError("vec_to_elem: entry out of range");
  return e;
}

}  // namespace mspread
