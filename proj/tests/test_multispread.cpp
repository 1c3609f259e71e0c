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

#include <doctest.h>

#include <random>

#include "mspread/linalg.hpp"
#include "mspread/multispread.hpp"
#include "support/oracles.hpp"

using namespace mspread;

namespace {

BlockTuple tuple_of(std::initializer_list<std::initializer_list<int>> vectors, int m) {
  MatP cols(m, static_cast<Eigen::Index>(vectors.size()));
  Eigen::Index j = 0;
  for (const auto& v : vectors) {
    Eigen::Index i = 0;
    for (int x : v) cols(i++, j) = x;
    ++j;
  }
  return BlockTuple(cols);
}

std::vector<oracle::Digits> columns(const BlockTuple& b) {
  std::vector<oracle::Digits> out;
  for (Eigen::Index j = 0; j < b.t(); ++j) {
    const VecP v = b.vector(j);
    out.emplace_back(v.data(), v.data() + v.size());
  }
  return out;
}

// lambda/mu read off the summed starred multisets, or nullopt if not uniform.
std::optional<SpreadParams> oracle_params(const std::vector<BlockTuple>& blocks, int m, int p) {
  std::map<std::uint64_t, std::uint64_t> total;
  for (const auto& b : blocks)
    for (auto [v, c] : oracle::starred_span_counts(columns(b), m, p)) total[v] += c;
  const std::uint64_t size = oracle::power(static_cast<std::uint64_t>(p), static_cast<unsigned>(m));
  const std::uint64_t mu = total.count(1) ? total[1] : 0;
  for (std::uint64_t v = 1; v < size; ++v) {
    if ((total.count(v) ? total[v] : 0) != mu) return std::nullopt;
  }
  return SpreadParams{total.count(0) ? total[0] : 0, mu};
}

void check_against_oracle(const Ambient& a, const std::vector<BlockTuple>& blocks) {
  const auto r = classify(a, blocks);
  const auto expected = oracle_params(blocks, a.m, a.p);
  REQUIRE(r.ok() == expected.has_value());
  if (expected) {
    CHECK(*r.params == *expected);
    CHECK(r.params->lambda + r.params->mu * (a.space_size() - 1) ==
          blocks.size() * (ipow(static_cast<std::uint64_t>(a.p), static_cast<unsigned>(a.t)) - 1));
  } else {
    REQUIRE(r.witness);
    CHECK(r.witness->first_count != r.witness->second_count);
  }
}

}  // namespace

TEST_CASE("span_multiset examples") {
  const auto b = tuple_of({{1, 0}, {1, 0}}, 2);
  const auto starred = span_multiset(b, 2, true);
  CHECK(starred.total() == 3);
  CHECK(starred.counts == std::vector<std::uint64_t>{1, 0, 2, 0});  // 00 once, 10 twice
  const auto full = span_multiset(b, 2, false);
  CHECK(full.counts == std::vector<std::uint64_t>{2, 0, 2, 0});

  const auto basis = span_multiset(tuple_of({{1, 0}, {0, 1}}, 2), 3, true);
  CHECK(basis.total() == 8);
  CHECK(basis.counts[0] == 0);
}

TEST_CASE("classify examples") {
  const Ambient f2{2, 1, 2};
  const std::vector<BlockTuple> pg = {tuple_of({{1, 0}}, 2), tuple_of({{0, 1}}, 2), tuple_of({{1, 1}}, 2)};
  const auto r = classify(f2, pg);
  REQUIRE(r.ok());
  CHECK(*r.params == SpreadParams{0, 1});

  const auto bad = classify(f2, {tuple_of({{1, 0}}, 2)});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.witness->first_count == 0);  // 01 is uncovered, 10 is covered
  CHECK(bad.witness->second_count == 1);

  const auto zeros = classify(Ambient{2, 2, 2}, {BlockTuple::zero(2, 2)});
  REQUIRE(zeros.ok());
  CHECK(*zeros.params == SpreadParams{3, 0});

  CHECK_THROWS_AS(classify(Ambient{2, 2, 3}, {BlockTuple::zero(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(Multispread(f2, {tuple_of({{1, 0}}, 2)}), NotAMultispread);
  CHECK_THROWS_AS(Multispread(f2, pg, SpreadParams{1, 1}), NotAMultispread);
}

TEST_CASE("constructor examples") {
  auto params = [](const Ambient& a, const std::vector<BlockTuple>& b) { return *classify(a, b).params; };

  CHECK(construct_fold_spread(2, 1, 2).size() == 3);
  CHECK(params({2, 1, 2}, construct_fold_spread(2, 1, 2)) == SpreadParams{0, 1});
  CHECK(construct_fold_spread(2, 2, 3).size() == 7);
  CHECK(params({2, 2, 3}, construct_fold_spread(2, 2, 3)) == SpreadParams{0, 3});
  CHECK(construct_fold_spread(3, 2, 2).size() == 4);
  CHECK(params({3, 2, 2}, construct_fold_spread(3, 2, 2)) == SpreadParams{0, 4});

  CHECK(construct_subfield_spread(2, 2, 4).size() == 5);
  CHECK(params({2, 2, 4}, construct_subfield_spread(2, 2, 4)) == SpreadParams{0, 1});

  CHECK(params({2, 2, 3}, construct_projected(2, 2, 3, 1)) == SpreadParams{1, 2});
  CHECK(params({2, 2, 2}, construct_projected(2, 2, 2, 2)) == SpreadParams{3, 4});

  CHECK(params({3, 2, 1}, construct_trivial(3, 2, 1, 2)) == SpreadParams{16, 0});

  const auto flagship = construct_sum(2, 2, 3, 1, 1, 1);
  CHECK(flagship.n() == 13);
  CHECK(flagship.params() == SpreadParams{4, 5});

  const auto perfect = construct_for_perfect(2, 2, 13, 5);
  CHECK(perfect.n() == 13);
  CHECK(perfect.ambient() == Ambient{2, 2, 3});
  CHECK(perfect.params() == SpreadParams{4, 5});

  const auto hamming = construct_for_perfect(2, 1, 3, 1);
  CHECK(hamming.ambient().m == 2);
  CHECK(hamming.params() == SpreadParams{0, 1});
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(construct_fold_spread(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_subfield_spread(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct_projected(2, 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_sum(2, 3, 2, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_trivial(4, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_for_perfect(2, 2, 3, 5), InfeasibleParameters);
  try {
    construct_for_perfect(2, 2, 5, 3);
  } catch (const InfeasibleParameters& e) {
    CHECK(e.violated() == std::vector<std::string>{condition::kPowerOfP});
  }
  CHECK_THROWS_AS(concat(construct_sum(2, 1, 2, 0, 1, 0), construct_sum(2, 1, 3, 0, 1, 0)), std::invalid_argument);
}

TEST_CASE("classify agrees with the enumeration oracle on random tuples") {
  std::mt19937_64 rng(99);
  for (auto [p, t, m] : {std::tuple{2, 1, 3}, {2, 2, 3}, {2, 3, 2}, {3, 1, 2}, {3, 2, 2}, {2, 2, 4}}) {
    std::uniform_int_distribution<int> entry(0, p - 1);
    std::uniform_int_distribution<int> count(1, 8);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<BlockTuple> blocks(static_cast<std::size_t>(count(rng)));
      for (auto& b : blocks) {
        MatP cols(m, t);
        for (Eigen::Index i = 0; i < cols.size(); ++i) cols.data()[i] = entry(rng);
        b = BlockTuple(cols);
      }
      check_against_oracle({p, t, m}, blocks);
    }
  }
  // uniform by construction but with repeated and dependent columns
  for (int trial = 0; trial < 20; ++trial) {
    auto blocks = construct_fold_spread(2, 1, 3);
    const auto extra = construct_trivial(2, 1, 3, static_cast<std::uint64_t>(trial % 3));
    blocks.insert(blocks.end(), extra.begin(), extra.end());
    check_against_oracle({2, 1, 3}, blocks);
  }
}

TEST_CASE("every constructor yields the expected parameters") {
  for (int p : {2, 3}) {
    for (int t = 1; t <= 3; ++t) {
      const auto q1 = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(t)) - 1;
      for (int m = 1; m <= 4; ++m) {
        if (ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(m + t)) > 4096) continue;
        CAPTURE(p);
        CAPTURE(t);
        CAPTURE(m);
        const Ambient a{p, t, m};
        if (t <= m) {
          const auto fold = construct_fold_spread(p, t, m);
          CHECK(fold.size() == (a.space_size() - 1) / static_cast<std::uint64_t>(p - 1));
          CHECK(oracle_params(fold, m, p) == std::optional<SpreadParams>(SpreadParams{0, q1 / static_cast<std::uint64_t>(p - 1)}));
        }
        if (m % t == 0) {
          const auto sub = construct_subfield_spread(p, t, m);
          CHECK(sub.size() == (a.space_size() - 1) / q1);
          CHECK(oracle_params(sub, m, p) == std::optional<SpreadParams>(SpreadParams{0, 1}));
        }
        for (int s = 0; s <= t; ++s) {
          if ((m + s) % t != 0) continue;
          const auto ps = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(s));
          CHECK(oracle_params(construct_projected(p, t, m, s), m, p) == std::optional<SpreadParams>(SpreadParams{ps - 1, ps}));
        }
        CHECK(oracle_params(construct_trivial(p, t, m, 2), m, p) == std::optional<SpreadParams>(SpreadParams{2 * q1, 0}));
      }
    }
  }
}

TEST_CASE("construct_for_perfect round trip over feasible parameters") {
  int built = 0;
  for (int p : {2, 3}) {
    for (int t = 1; t <= 3; ++t) {
      const auto q = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(t));
      for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t mu = 1; mu < ball_size(n, q); ++mu) {
          const auto v = feasible_additive(p, t, n, mu);
          if (!v.feasible) {
            CHECK_THROWS_AS(construct_for_perfect(p, t, n, mu), InfeasibleParameters);
            continue;
          }
          if (ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(v.recipe->m + t)) > 4096) continue;
          const auto ms = construct_for_perfect(p, t, n, mu);
          CHECK(ms.n() == n);
          CHECK(ms.ambient().m == v.recipe->m);
          CHECK(oracle_params(ms.blocks(), ms.ambient().m, p) == std::optional<SpreadParams>(SpreadParams{mu - 1, mu}));
          ++built;
        }
      }
    }
  }
  CHECK(built > 20);
}
