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

#include "mspread/params.hpp"

namespace mspread {

namespace {

std::uint64_t checked_q(Residue p, int t) {
  std::uint64_t q = 1;
  for (int i = 0; i < t; ++i) {
    if (q > (UINT64_MAX / static_cast<std::uint64_t>(p))) throw std::invalid_argument("q = p^t overflows 64 bits");
    q *= static_cast<std::uint64_t>(p);
  }
  return q;
}

std::uint64_t strip_p(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace

std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto primes = prime_factors(q);
  if (primes.size() != 1 || primes[0] > static_cast<std::uint64_t>(INT32_MAX)) return std::nullopt;
  return PrimePower{static_cast<Residue>(primes[0]), p_valuation(q, primes[0])};
}

int p_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

ParamQuery::ParamQuery(Residue p_, int t_, std::uint64_t n_, std::uint64_t mu_) : p(p_), t(t_), q(0), n(n_), mu(mu_) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  q = checked_q(p, t);
}

ParamQuery ParamQuery::from_q(std::uint64_t q, std::uint64_t n, std::uint64_t mu) {
  const auto pp = factor_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return ParamQuery(pp->p, pp->t, n, mu);
}

std::uint64_t Recipe::block_count() const {
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t projected = (ipow(up, static_cast<unsigned>(m + parts.s)) - 1) / (ipow(up, static_cast<unsigned>(t)) - 1);
  const std::uint64_t fold = (ipow(up, static_cast<unsigned>(m)) - 1) / (up - 1);
  return parts.alpha + parts.beta * projected + parts.gamma * fold;
}

std::uint64_t ball_size(std::uint64_t n, std::uint64_t q) { return (q - 1) * n + 1; }

bool lloyd_check(std::uint64_t n, std::uint64_t q) { return n % q == 1 % q; }

Decomposition decompose_mu(Residue p, int t, int m, std::uint64_t mu) {
  if (m < 1 || t < 1 || mu < 1) throw InadmissibleParameters("decompose_mu: need m, t, mu >= 1");
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t pt1 = ipow(up, static_cast<unsigned>(t)) - 1;
  Decomposition d;
  d.s = (t - m % t) % t;

  if (m >= t) {
    const std::uint64_t lhs = (mu % pt1) * (ipow(up, static_cast<unsigned>(t - d.s)) % pt1) % pt1;
    if (lhs != 1 % pt1) {
      throw InadmissibleParameters("inadmissible mu = " + std::to_string(mu) + ": mu * p^(t-s) is not congruent to 1 modulo p^t - 1");
    }
    const std::uint64_t ps = ipow(up, static_cast<unsigned>(d.s));
    if (mu < ps || (mu - ps) % pt1 != 0) throw std::logic_error("decompose_mu: mu - p^s not a nonnegative multiple of p^t - 1");
    d.alpha = (mu - ps) / pt1;
    d.beta = 1;
    d.gamma = (up - 1) * d.alpha;
    return d;
  }

  const std::uint64_t lift = ipow(up, static_cast<unsigned>(t - m));
  if (mu % lift != 0) {
    throw InadmissibleParameters("inadmissible mu = " + std::to_string(mu) + ": p^(t-m) = " + std::to_string(lift) +
                                 " does not divide mu");
  }
  d.beta = mu / lift;
  if ((d.beta - 1) % pt1 != 0) {
    throw InadmissibleParameters("inadmissible mu = " + std::to_string(mu) + ": mu * p^(t-s) is not congruent to 1 modulo p^t - 1");
  }
  d.alpha = (d.beta - 1) / pt1;
  d.gamma = 0;
  return d;
}

FeasibilityVerdict feasible_additive(Residue p, int t, std::uint64_t n, std::uint64_t mu) {
  const ParamQuery query(p, t, n, mu);
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t ball = ball_size(n, query.q);
  const auto nt = static_cast<std::int64_t>(n) * t;

  // mu q^n / ball = p^k, evaluated on p-adic valuations and p-free parts.
  const int a = p_valuation(mu, up);
  const int b = p_valuation(ball, up);
  const std::uint64_t mu_free = strip_p(mu, up);
  const std::uint64_t ball_free = strip_p(ball, up);

  FeasibilityVerdict verdict;
  if (mu_free % ball_free != 0 || b > a + nt) {
    verdict.violated.emplace_back(condition::kSpherePacking);
    return verdict;
  }
  if (mu_free != ball_free) {
    verdict.violated.emplace_back(condition::kPowerOfP);
    return verdict;
  }
  const std::int64_t k = a + nt - b;
  if (k >= nt) {
    verdict.violated.emplace_back(condition::kMuUpperBound);
    return verdict;
  }
  const int m = static_cast<int>(nt - k);
  const bool cond_ii = m >= t || mu % ipow(up, static_cast<unsigned>(t - m)) == 0;
  const bool lloyd = lloyd_check(n, query.q);
  if (cond_ii != lloyd) {
    throw std::logic_error("feasible_additive: divisibility condition disagrees with n = 1 mod q for p=" +
                           std::to_string(p) + " t=" + std::to_string(t) + " n=" + std::to_string(n) +
                           " mu=" + std::to_string(mu));
  }
  if (!cond_ii) {
    verdict.violated.emplace_back(condition::kDivisibility);
    verdict.violated.emplace_back(condition::kLloyd);
    return verdict;
  }

  Recipe r;
  r.p = p;
  r.t = t;
  r.n = n;
  r.mu = mu;
  r.kappa = 1;
  r.mu_additive = mu;
  r.k = static_cast<int>(k);
  r.m = m;
  r.parts = decompose_mu(p, t, m, mu);
  r.cardinality = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
  if (r.block_count() != n) throw std::logic_error("feasible_additive: block count identity fails");

  verdict.feasible = true;
  verdict.recipe = std::move(r);
  return verdict;
}

FeasibilityVerdict feasible_general(std::uint64_t q, std::uint64_t n, std::uint64_t mu) {
  const ParamQuery query = ParamQuery::from_q(q, n, mu);
  const auto up = static_cast<std::uint64_t>(query.p);
  const std::uint64_t ball = ball_size(n, q);
  const auto nt = static_cast<std::int64_t>(n) * query.t;
  const int b = p_valuation(ball, up);
  const std::uint64_t ball_free = strip_p(ball, up);

  FeasibilityVerdict verdict;
  if (mu >= ball) verdict.violated.emplace_back(condition::kMuUpperBound);
  const bool integral = mu % ball_free == 0 && b <= p_valuation(mu, up) + nt;
  if (!integral) verdict.violated.emplace_back(condition::kSpherePacking);
  if (!lloyd_check(n, q)) verdict.violated.emplace_back(condition::kLloyd);
  if (!verdict.violated.empty()) return verdict;

  // K = (mu / ball_free) * p^(nt - b) = kappa * p^k with gcd(kappa, p) = 1.
  const std::uint64_t c = mu / ball_free;
  const int vc = p_valuation(c, up);
  const std::uint64_t kappa = strip_p(c, up);
  const auto k = static_cast<int>(vc + nt - b);

  FeasibilityVerdict sub = feasible_additive(query.p, query.t, n, mu / kappa);
  if (!sub.feasible || sub.recipe->k != k) {
    throw std::logic_error("feasible_general: additive sub-problem for mu/kappa is infeasible");
  }
  Recipe r = std::move(*sub.recipe);
  r.mu = mu;
  r.kappa = kappa;
  r.cardinality = BigInt(kappa) * boost::multiprecision::pow(BigInt(query.p), static_cast<unsigned>(k));

  verdict.feasible = true;
  verdict.recipe = std::move(r);
  return verdict;
}

std::vector<FeasibleRow> enumerate_feasible(std::uint64_t q, std::uint64_t n_max) {
  if (!factor_prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  std::vector<FeasibleRow> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (!lloyd_check(n, q)) continue;
    FeasibleRow row{n, n == 1, {}};
    const std::uint64_t ball = ball_size(n, q);
    for (std::uint64_t mu = 1; mu < ball; ++mu) {
      const auto v = feasible_general(q, n, mu);
      if (!v.feasible) continue;
      const auto kappa = v.recipe->kappa;
      row.entries.push_back({mu, kappa == 1 ? RowKind::additive : RowKind::coset_union, kappa});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mspread
