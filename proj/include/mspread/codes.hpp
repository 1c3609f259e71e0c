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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mspread/ff.hpp"
#include "mspread/linalg.hpp"
#include "mspread/multispread.hpp"
#include "mspread/params.hpp"

/// Codes in the Hamming graph H(n, q), q = p^t: kernels of block check
/// matrices, coset unions, and exhaustive verification of the 1-perfect and
/// completely-regular (covering radius 1) properties.
///
/// A word over [0, q)^n is stored as one integer: symbols are base-q digits
/// with the first symbol most significant. Expanding each symbol into its t
/// base-p digits (most significant first) gives the same integer read as an
/// nt-digit base-p numeral, so a word's code is also vec_index of its
/// GF(p)^{nt} coordinate vector.
namespace mspread {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

class TooLargeToEnumerate : public std::length_error {
 public:
  TooLargeToEnumerate(const std::string& what, std::uint64_t dimension)
      : std::length_error(what), dimension_(dimension) {}
  std::uint64_t dimension() const { return dimension_; }

 private:
  std::uint64_t dimension_;
};

class TrivialCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HypothesisViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// m x nt matrix over GF(p); columns t*i .. t*i + t - 1 hold block i.
class CheckMatrix {
 public:
  CheckMatrix(Residue p, int t, int n, MatP inner);

  Residue p() const { return p_; }
  int t() const { return t_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(inner_.rows()); }
  const MatP& inner() const { return inner_; }
  auto block(int i) const { return inner_.middleCols(static_cast<Eigen::Index>(i) * t_, t_); }

 private:
  Residue p_;
  int t_;
  int n_;
  MatP inner_;
};

CheckMatrix check_matrix(const Multispread& ms);

class CodeSet {
 public:
  /// Sorts and deduplicates; throws std::invalid_argument on out-of-range words.
  CodeSet(Residue p, int t, int n, std::vector<std::uint64_t> words);
  static CodeSet from_symbols(std::uint64_t q, int n, const std::vector<std::vector<std::uint64_t>>& words);

  Residue p() const { return p_; }
  int t() const { return t_; }
  int n() const { return n_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t vertex_count() const { return vertices_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  bool contains(std::uint64_t word) const;

  std::vector<std::uint64_t> symbols(std::uint64_t word) const;
  VecP to_vector(std::uint64_t word) const;
  std::uint64_t from_vector(const VecP& v) const;
  /// Coordinatewise sum over GF(p)^{nt}.
  std::uint64_t add_words(std::uint64_t a, std::uint64_t b) const;
  /// c + C.
  CodeSet translate(std::uint64_t c) const;

 private:
  Residue p_;
  int t_;
  int n_;
  std::uint64_t q_;
  std::uint64_t vertices_;
  std::vector<std::uint64_t> words_;
};

/// Fast membership and radius-1 ball counts for a fixed code.
class CodeIndex {
 public:
  explicit CodeIndex(const CodeSet& code);

  bool contains(std::uint64_t word) const;
  /// Codewords at distance exactly 1.
  std::uint64_t neighbor_count(std::uint64_t v) const;
  /// Codewords at distance at most 1.
  std::uint64_t ball_count(std::uint64_t v) const { return neighbor_count(v) + (contains(v) ? 1 : 0); }

 private:
  int n_;
  std::uint64_t q_;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

struct QuotientMatrix2 {
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  std::uint64_t n = 0;
  std::uint64_t q = 0;

  std::array<std::array<std::uint64_t, 2>, 2> entries() const {
    const std::uint64_t deg = n * (q - 1);
    return {{{lambda, deg - lambda}, {mu, deg - mu}}};
  }
  friend bool operator==(const QuotientMatrix2&, const QuotientMatrix2&) = default;
};

/// Two vertices of the same cell with different counts.
struct VertexWitness {
  std::uint64_t first = 0;
  std::uint64_t first_count = 0;
  std::uint64_t second = 0;
  std::uint64_t second_count = 0;
};

struct PerfectResult {
  std::optional<std::uint64_t> mu;
  std::optional<VertexWitness> witness;
  bool ok() const { return mu.has_value(); }
};

struct Cr1Result {
  std::optional<QuotientMatrix2> matrix;
  std::optional<VertexWitness> witness;
  std::string reason;
  bool ok() const { return matrix.has_value(); }
};

struct KernelCode {
  std::uint64_t dimension = 0;
  std::vector<VecP> basis;
  std::optional<CodeSet> words;
};

/// Always returns the basis; materializes the words when `explicit_words`
/// (throws TooLargeToEnumerate when p^dimension exceeds `cap`).
KernelCode kernel_code(const CheckMatrix& m, bool explicit_words, std::uint64_t cap = kEnumerationCap);

/// All words offset + span(basis), unsorted.
std::vector<std::uint64_t> enumerate_span(const std::vector<VecP>& basis, Residue p, std::uint64_t offset = 0);

PerfectResult verify_perfect_bruteforce(const CodeSet& code, std::uint64_t cap = kEnumerationCap);
Cr1Result verify_cr1_bruteforce(const CodeSet& code, std::uint64_t cap = kEnumerationCap);

/// Quotient matrix of ker M(T_1, ..., T_n) read off the spread parameters;
/// throws HypothesisViolated when the block vectors do not span GF(p)^m.
QuotientMatrix2 verify_additive_structural(const Multispread& ms);

/// The first kappa syndromes, in lexicographic order, that lie in the
/// column space of M.
std::vector<VecP> coset_syndromes(const CheckMatrix& m, std::uint64_t kappa);
CodeSet coset_union(const CheckMatrix& m, std::uint64_t kappa, std::uint64_t cap = kEnumerationCap);
/// Union of the cosets x + ker M with M x = s for each listed syndrome.
/// Throws InconsistentSystem for a syndrome outside the column space and
/// std::invalid_argument for repeated syndromes.
CodeSet coset_union_for(const CheckMatrix& m, const std::vector<VecP>& syndromes, std::uint64_t cap = kEnumerationCap);

struct GeneralConstruction {
  Recipe recipe;
  Multispread spread;
  CheckMatrix matrix;
  std::vector<VecP> syndromes;
  std::optional<CodeSet> code;
};

/// mu-fold 1-perfect code in H(n, q) as kappa cosets of an additive code;
/// the word set is materialized when `materialize` and kappa * p^k <= cap.
GeneralConstruction construct_general_perfect(std::uint64_t q, std::uint64_t n, std::uint64_t mu,
                                              bool materialize = true, std::uint64_t cap = kEnumerationCap);

}  // namespace mspread
