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

#include "mspread/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mspread/linalg.hpp"

namespace mspread {

namespace {

constexpr std::uint64_t kDenseIndexLimit = std::uint64_t{1} << 28;

// Digitwise sum of two `len`-digit base-p numerals.
std::uint64_t add_digits(std::uint64_t a, std::uint64_t b, Residue p, Eigen::Index len) {
  if (p == 2) return a ^ b;
  const auto up = static_cast<std::uint64_t>(p);
  std::uint64_t out = 0, w = 1;
  for (Eigen::Index i = 0; i < len; ++i) {
    out += ((a % up + b % up) % up) * w;
    a /= up;
    b /= up;
    w *= up;
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, const char* what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) throw std::invalid_argument(std::string(what) + ": size exceeds 2^62");
    r *= base;
  }
  return r;
}

}  // namespace

CheckMatrix::CheckMatrix(Residue p, int t, int n, MatP inner) : p_(p), t_(t), n_(n), inner_(std::move(inner)) {
  if (!is_prime(p_) || t_ < 1 || n_ < 1) throw std::invalid_argument("CheckMatrix: invalid p, t or n");
  if (inner_.cols() != static_cast<Eigen::Index>(n_) * t_) throw std::invalid_argument("CheckMatrix: column count must be n*t");
  if (inner_.size() > 0 && ((inner_.array() < 0).any() || (inner_.array() >= p_).any())) {
    throw std::invalid_argument("CheckMatrix: entry out of range");
  }
}

CheckMatrix check_matrix(const Multispread& ms) {
  const auto& a = ms.ambient();
  const auto n = static_cast<int>(ms.n());
  if (n == 0) throw std::invalid_argument("check_matrix: empty multispread");
  MatP inner(a.m, static_cast<Eigen::Index>(n) * a.t);
  for (int i = 0; i < n; ++i) {
    inner.middleCols(static_cast<Eigen::Index>(i) * a.t, a.t) = ms.blocks()[static_cast<std::size_t>(i)].vectors();
  }
  return CheckMatrix(a.p, a.t, n, std::move(inner));
}

CodeSet::CodeSet(Residue p, int t, int n, std::vector<std::uint64_t> words)
    : p_(p), t_(t), n_(n), words_(std::move(words)) {
  if (!is_prime(p_) || t_ < 1 || n_ < 1) throw std::invalid_argument("CodeSet: invalid p, t or n");
  q_ = checked_power(static_cast<std::uint64_t>(p_), static_cast<std::uint64_t>(t_), "CodeSet alphabet");
  vertices_ = checked_power(q_, static_cast<std::uint64_t>(n_), "CodeSet vertex set");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (!words_.empty() && words_.back() >= vertices_) throw std::invalid_argument("CodeSet: word out of range");
}

CodeSet CodeSet::from_symbols(std::uint64_t q, int n, const std::vector<std::vector<std::uint64_t>>& words) {
  const auto pp = factor_prime_power(q);
  if (!pp) throw std::invalid_argument("CodeSet: q = " + std::to_string(q) + " is not a prime power");
  std::vector<std::uint64_t> codes;
  codes.reserve(words.size());
  for (const auto& w : words) {
    if (w.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("CodeSet: word length mismatch");
    std::uint64_t c = 0;
    for (auto s : w) {
      if (s >= q) throw std::invalid_argument("CodeSet: symbol out of range");
      c = c * q + s;
    }
    codes.push_back(c);
  }
  return CodeSet(pp->p, pp->t, n, std::move(codes));
}

bool CodeSet::contains(std::uint64_t word) const { return std::binary_search(words_.begin(), words_.end(), word); }

std::vector<std::uint64_t> CodeSet::symbols(std::uint64_t word) const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = word % q_;
    word /= q_;
  }
  return out;
}

VecP CodeSet::to_vector(std::uint64_t word) const {
  return vec_from_index(word, static_cast<Eigen::Index>(n_) * t_, p_);
}

std::uint64_t CodeSet::from_vector(const VecP& v) const {
  if (v.size() != static_cast<Eigen::Index>(n_) * t_) throw std::invalid_argument("CodeSet::from_vector: length mismatch");
  return vec_index(v, p_);
}

std::uint64_t CodeSet::add_words(std::uint64_t a, std::uint64_t b) const {
  return add_digits(a, b, p_, static_cast<Eigen::Index>(n_) * t_);
}

CodeSet CodeSet::translate(std::uint64_t c) const {
  std::vector<std::uint64_t> out;
  out.reserve(words_.size());
  for (auto w : words_) out.push_back(add_words(w, c));
  return CodeSet(p_, t_, n_, std::move(out));
}

CodeIndex::CodeIndex(const CodeSet& code) : n_(code.n()), q_(code.q()) {
  if (code.vertex_count() <= kDenseIndexLimit) {
    dense_.assign(code.vertex_count(), false);
    for (auto w : code.words()) dense_[w] = true;
  } else {
    sparse_.reserve(code.size());
    sparse_.insert(code.words().begin(), code.words().end());
  }
}

bool CodeIndex::contains(std::uint64_t word) const { return dense_.empty() ? sparse_.count(word) > 0 : dense_[word]; }

std::uint64_t CodeIndex::neighbor_count(std::uint64_t v) const {
  std::uint64_t count = 0;
  std::uint64_t w = 1;
  for (int i = 0; i < n_; ++i, w *= q_) {
    const std::uint64_t d = (v / w) % q_;
    const std::uint64_t base = v - d * w;
    for (std::uint64_t e = 0; e < q_; ++e) {
      if (e != d && contains(base + e * w)) ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> enumerate_span(const std::vector<VecP>& basis, Residue p, std::uint64_t offset) {
  const Eigen::Index len = basis.empty() ? 0 : basis.front().size();
  std::vector<std::uint64_t> gens;
  gens.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.size() != len) throw std::invalid_argument("enumerate_span: basis vectors differ in length");
    gens.push_back(vec_index(b, p));
  }
  const std::uint64_t total = checked_power(static_cast<std::uint64_t>(p), gens.size(), "enumerate_span");
  std::vector<std::uint64_t> out;
  out.reserve(total);
  std::uint64_t cur = offset;
  out.push_back(cur);
  if (p == 2) {
    // binary reflected Gray code: step i flips generator ctz(i)
    for (std::uint64_t i = 1; i < total; ++i) {
      cur ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
      out.push_back(cur);
    }
    return out;
  }
  std::vector<Residue> coeff(gens.size(), 0);
  for (std::uint64_t i = 1; i < total; ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      cur = add_digits(cur, gens[j], p, len);
      if (++coeff[j] < p) break;
      coeff[j] = 0;  // p copies of gens[j] cancel
    }
    out.push_back(cur);
  }
  return out;
}

KernelCode kernel_code(const CheckMatrix& m, bool explicit_words, std::uint64_t cap) {
  auto rk = rank_kernel(m.inner(), m.p());
  KernelCode out;
  out.dimension = rk.kernel_basis.size();
  out.basis = std::move(rk.kernel_basis);
  if (explicit_words) {
    const long double size = std::pow(static_cast<long double>(m.p()), static_cast<long double>(out.dimension));
    if (size > static_cast<long double>(cap)) {
      throw TooLargeToEnumerate("kernel of dimension " + std::to_string(out.dimension) + " is too large to enumerate",
                                out.dimension);
    }
    out.words = CodeSet(m.p(), m.t(), m.n(), enumerate_span(out.basis, m.p()));
  }
  return out;
}

namespace {

void check_bruteforce_preconditions(const CodeSet& code, std::uint64_t cap) {
  const std::uint64_t ball = ball_size(static_cast<std::uint64_t>(code.n()), code.q());
  const long double work = static_cast<long double>(code.vertex_count()) * static_cast<long double>(ball);
  if (work > static_cast<long double>(cap)) {
    throw TooLargeToEnumerate("exhaustive check of H(" + std::to_string(code.n()) + ", " + std::to_string(code.q()) +
                                  ") exceeds the evaluation cap",
                              static_cast<std::uint64_t>(code.n()));
  }
  if (code.size() == 0) throw TrivialCode("trivial code: empty");
  if (code.size() == code.vertex_count()) throw TrivialCode("trivial code: the whole vertex set");
}

}  // namespace

PerfectResult verify_perfect_bruteforce(const CodeSet& code, std::uint64_t cap) {
  check_bruteforce_preconditions(code, cap);
  const CodeIndex index(code);
  const std::uint64_t mu = index.ball_count(0);
  PerfectResult r;
  for (std::uint64_t v = 1; v < code.vertex_count(); ++v) {
    const std::uint64_t c = index.ball_count(v);
    if (c != mu) {
      r.witness = VertexWitness{0, mu, v, c};
      return r;
    }
  }
  r.mu = mu;
  return r;
}

Cr1Result verify_cr1_bruteforce(const CodeSet& code, std::uint64_t cap) {
  check_bruteforce_preconditions(code, cap);
  const CodeIndex index(code);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> inner, outer;  // (vertex, count)
  Cr1Result r;
  for (std::uint64_t v = 0; v < code.vertex_count(); ++v) {
    const bool in = index.contains(v);
    const std::uint64_t c = index.neighbor_count(v);
    auto& ref = in ? inner : outer;
    if (!ref) {
      ref = std::make_pair(v, c);
    } else if (ref->second != c) {
      r.witness = VertexWitness{ref->first, ref->second, v, c};
      r.reason = in ? "codewords have different numbers of code neighbours"
                    : "non-codewords have different numbers of code neighbours";
      return r;
    }
  }
  if (outer->second == 0) {
    r.witness = VertexWitness{outer->first, 0, outer->first, 0};
    r.reason = "non-codewords have no code neighbours: covering radius exceeds 1";
    return r;
  }
  r.matrix = QuotientMatrix2{inner->second, outer->second, static_cast<std::uint64_t>(code.n()), code.q()};
  return r;
}

QuotientMatrix2 verify_additive_structural(const Multispread& ms) {
  const CheckMatrix m = check_matrix(ms);
  if (rank_mod(m.inner(), m.p()) < m.m()) {
    throw HypothesisViolated("check-matrix columns do not span GF(" + std::to_string(m.p()) + ")^" +
                             std::to_string(m.m()));
  }
  const std::uint64_t q = ipow(static_cast<std::uint64_t>(m.p()), static_cast<unsigned>(m.t()));
  return QuotientMatrix2{ms.params().lambda, ms.params().mu, ms.n(), q};
}

std::vector<VecP> coset_syndromes(const CheckMatrix& m, std::uint64_t kappa) {
  const auto rank = static_cast<std::uint64_t>(rank_mod(m.inner(), m.p()));
  const long double cosets = std::pow(static_cast<long double>(m.p()), static_cast<long double>(rank));
  if (kappa < 1 || static_cast<long double>(kappa) > cosets) {
    throw std::out_of_range("coset count " + std::to_string(kappa) + " outside [1, p^rank]");
  }
  std::vector<VecP> out;
  for (std::uint64_t idx = 0; out.size() < kappa; ++idx) {
    VecP s = vec_from_index(idx, m.m(), m.p());
    try {
      (void)solve_linear(m.inner(), s, m.p());
      out.push_back(std::move(s));
    } catch (const InconsistentSystem&) {
    }
  }
  return out;
}

CodeSet coset_union_for(const CheckMatrix& m, const std::vector<VecP>& syndromes, std::uint64_t cap) {
  std::vector<std::uint64_t> seen;
  for (const auto& s : syndromes) {
    if (s.size() != m.m()) throw std::invalid_argument("coset_union: syndrome length mismatch");
    seen.push_back(vec_index(s, m.p()));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw std::invalid_argument("coset_union: repeated syndrome");

  const auto rk = rank_kernel(m.inner(), m.p());
  const long double size = static_cast<long double>(syndromes.size()) *
                           std::pow(static_cast<long double>(m.p()), static_cast<long double>(rk.kernel_basis.size()));
  if (size > static_cast<long double>(cap)) {
    throw TooLargeToEnumerate("coset union of " + std::to_string(syndromes.size()) + " cosets is too large to enumerate",
                              rk.kernel_basis.size());
  }
  const auto kernel = enumerate_span(rk.kernel_basis, m.p());
  const Eigen::Index len = m.inner().cols();
  std::vector<std::uint64_t> words;
  words.reserve(static_cast<std::size_t>(size));
  for (const auto& s : syndromes) {
    const std::uint64_t rep = vec_index(solve_linear(m.inner(), s, m.p()), m.p());
    if (rep == 0) {
      words.insert(words.end(), kernel.begin(), kernel.end());
      continue;
    }
    for (auto w : kernel) words.push_back(add_digits(w, rep, m.p(), len));
  }
  return CodeSet(m.p(), m.t(), m.n(), std::move(words));
}

CodeSet coset_union(const CheckMatrix& m, std::uint64_t kappa, std::uint64_t cap) {
  return coset_union_for(m, coset_syndromes(m, kappa), cap);
}

GeneralConstruction construct_general_perfect(std::uint64_t q, std::uint64_t n, std::uint64_t mu, bool materialize,
                                              std::uint64_t cap) {
  FeasibilityVerdict v = feasible_general(q, n, mu);
  if (!v.feasible) {
    std::string names;
    for (const auto& c : v.violated) names += (names.empty() ? "" : ", ") + c;
    throw InfeasibleParameters("no " + std::to_string(mu) + "-fold 1-perfect code in H(" + std::to_string(n) + ", " +
                                   std::to_string(q) + "): violated " + names,
                               v.violated);
  }
  Recipe recipe = std::move(*v.recipe);
  Multispread spread = construct_for_recipe(recipe);
  CheckMatrix matrix = check_matrix(spread);
  if (rank_mod(matrix.inner(), matrix.p()) != recipe.m) throw std::logic_error("construct_general_perfect: rank mismatch");
  std::vector<VecP> syndromes = coset_syndromes(matrix, recipe.kappa);

  std::optional<CodeSet> code;
  if (materialize && recipe.cardinality <= BigInt(cap)) code = coset_union(matrix, recipe.kappa, cap);
  return GeneralConstruction{std::move(recipe), std::move(spread), std::move(matrix), std::move(syndromes),
                             std::move(code)};
}

}  // namespace mspread
