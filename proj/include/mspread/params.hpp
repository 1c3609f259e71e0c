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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mspread/ff.hpp"

/// Parameter feasibility for multifold 1-perfect codes in H(n, q), q = p^t,
/// and the recipe (m, k, s, alpha, beta, gamma, kappa) that realizes them.
namespace mspread {

using BigInt = boost::multiprecision::cpp_int;

namespace condition {
inline constexpr const char* kSpherePacking = "sphere-packing";
inline constexpr const char* kPowerOfP = "power-of-p";
inline constexpr const char* kLloyd = "lloyd";
inline constexpr const char* kMuUpperBound = "mu-upper-bound";
inline constexpr const char* kDivisibility = "divisibility-(ii)";
}  // namespace condition

class InadmissibleParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PrimePower {
  Residue p = 0;
  int t = 0;
};

/// q = p^t with p prime, or nullopt.
std::optional<PrimePower> factor_prime_power(std::uint64_t q);

/// Exponent of prime p in n > 0.
int p_valuation(std::uint64_t n, std::uint64_t p);

struct ParamQuery {
  Residue p;
  int t;
  std::uint64_t q;
  std::uint64_t n;
  std::uint64_t mu;

  /// Throws std::invalid_argument when p is not prime or n, mu, t < 1.
  ParamQuery(Residue p, int t, std::uint64_t n, std::uint64_t mu);
  /// Throws std::invalid_argument when q is not a prime power.
  static ParamQuery from_q(std::uint64_t q, std::uint64_t n, std::uint64_t mu);
};

/// Multiplicities of the trivial, projected-subfield and fold-spread
/// components of a (mu - 1, mu)-spread.
struct Decomposition {
  int s = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t gamma = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Recipe {
  Residue p = 0;
  int t = 0;
  std::uint64_t n = 0;
  std::uint64_t mu = 0;
  /// Number of cosets; the additive kernel code is (mu / kappa)-fold.
  std::uint64_t kappa = 1;
  std::uint64_t mu_additive = 0;
  /// p-dimension of the additive code and the syndrome dimension m = nt - k.
  int k = 0;
  int m = 0;
  Decomposition parts;
  /// Code cardinality kappa * p^k.
  BigInt cardinality;

  std::uint64_t block_count() const;
};

struct FeasibilityVerdict {
  bool feasible = false;
  std::vector<std::string> violated;
  std::optional<Recipe> recipe;
};

std::uint64_t ball_size(std::uint64_t n, std::uint64_t q);
bool lloyd_check(std::uint64_t n, std::uint64_t q);

/// Existence of any mu-fold 1-perfect code in H(n, q).
FeasibilityVerdict feasible_general(std::uint64_t q, std::uint64_t n, std::uint64_t mu);
/// Existence of a GF(p)-linear mu-fold 1-perfect code in H(n, p^t).
FeasibilityVerdict feasible_additive(Residue p, int t, std::uint64_t n, std::uint64_t mu);

/// Split mu into (s, alpha, beta, gamma); throws InadmissibleParameters.
Decomposition decompose_mu(Residue p, int t, int m, std::uint64_t mu);

enum class RowKind { additive, coset_union };

struct FeasibleEntry {
  std::uint64_t mu;
  RowKind kind;
  std::uint64_t kappa;
};

struct FeasibleRow {
  std::uint64_t n;
  /// n == 1: every ball is the whole graph.
  bool degenerate;
  std::vector<FeasibleEntry> entries;
};

std::vector<FeasibleRow> enumerate_feasible(std::uint64_t q, std::uint64_t n_max);

}  // namespace mspread
