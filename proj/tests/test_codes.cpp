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
#include <set>

#include "mspread/codes.hpp"
#include "support/oracles.hpp"

using namespace mspread;

namespace {

oracle::Rows rows_of(const MatP& m) {
  oracle::Rows out(static_cast<std::size_t>(m.rows()), oracle::Digits(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
  return out;
}

std::set<std::uint64_t> as_set(const CodeSet& c) { return {c.words().begin(), c.words().end()}; }

}  // namespace

TEST_CASE("check matrix and kernel examples") {
  const auto hamming = construct_for_perfect(2, 1, 3, 1);
  const CheckMatrix h = check_matrix(hamming);
  CHECK(h.m() == 2);
  CHECK(h.inner().cols() == 3);
  const auto ker = kernel_code(h, true);
  CHECK(ker.dimension == 1);
  REQUIRE(ker.words);
  CHECK(ker.words->words() == std::vector<std::uint64_t>{0, 7});

  const auto flagship = construct_for_perfect(2, 2, 13, 5);
  const CheckMatrix f = check_matrix(flagship);
  CHECK(f.m() == 3);
  CHECK(f.inner().cols() == 26);
  CHECK(rank_mod(f.inner(), 2) == 3);
  const auto fk = kernel_code(f, false);
  CHECK(fk.dimension == 23);
  CHECK(fk.basis.size() == 23);
  CHECK_FALSE(fk.words);
  CHECK_THROWS_AS(kernel_code(f, true, std::uint64_t{1} << 20), TooLargeToEnumerate);
}

TEST_CASE("kernel words agree with the enumeration oracle") {
  for (auto [p, t, n, mu] : {std::tuple{2, 1, 3, 1}, {2, 1, 7, 1}, {2, 2, 5, 1}, {3, 1, 4, 1}, {2, 1, 5, 3}, {2, 2, 5, 4}, {3, 1, 4, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    CAPTURE(mu);
    const CheckMatrix m = check_matrix(construct_for_perfect(p, t, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(mu)));
    const auto ker = kernel_code(m, true);
    CHECK(as_set(*ker.words) == oracle::kernel_by_enumeration(rows_of(m.inner()), n * t, p));
  }
}

TEST_CASE("codeset word encoding") {
  const CodeSet c(2, 2, 3, {5, 1, 1});
  CHECK(c.words() == std::vector<std::uint64_t>{1, 5});
  CHECK(c.q() == 4);
  CHECK(c.symbols(27) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(c.symbols(5) == std::vector<std::uint64_t>{0, 1, 1});
  const VecP v = c.to_vector(27);
  CHECK(oracle::Digits(v.data(), v.data() + v.size()) == oracle::Digits{0, 1, 1, 0, 1, 1});
  CHECK(c.from_vector(v) == 27);
  CHECK(c.add_words(1, 3) == 2);
  CHECK_THROWS_AS(CodeSet(2, 1, 2, {4}), std::invalid_argument);
  CHECK(CodeSet::from_symbols(4, 2, {{3, 1}}).words() == std::vector<std::uint64_t>{13});
}

TEST_CASE("bruteforce verification examples") {
  const CodeSet rep(2, 1, 2, {0, 3});
  const auto cr = verify_cr1_bruteforce(rep);
  REQUIRE(cr.ok());
  CHECK(cr.matrix->lambda == 0);
  CHECK(cr.matrix->mu == 2);
  CHECK_FALSE(verify_perfect_bruteforce(rep).ok());

  const CodeSet half(2, 1, 2, {0, 1});
  const auto ch = verify_cr1_bruteforce(half);
  REQUIRE(ch.ok());
  CHECK(ch.matrix->lambda == 1);
  CHECK(ch.matrix->mu == 1);
  CHECK(ch.matrix->entries()[0][1] == 1);

  const CodeSet single(2, 1, 3, {0});
  const auto cs = verify_cr1_bruteforce(single);
  CHECK_FALSE(cs.ok());
  CHECK_FALSE(cs.reason.empty());
  REQUIRE(cs.witness);
  CHECK(cs.witness->first_count != cs.witness->second_count);
  CHECK_FALSE(verify_perfect_bruteforce(single).ok());

  CHECK_THROWS_AS(verify_perfect_bruteforce(CodeSet(2, 1, 2, {})), TrivialCode);
  CHECK_THROWS_AS(verify_cr1_bruteforce(CodeSet(2, 1, 2, {0, 1, 2, 3})), TrivialCode);
  CHECK_THROWS_AS(verify_perfect_bruteforce(CodeSet(2, 1, 20, {0}), 1000), TooLargeToEnumerate);

  const auto h = verify_perfect_bruteforce(*kernel_code(check_matrix(construct_for_perfect(2, 1, 7, 1)), true).words);
  REQUIRE(h.ok());
  CHECK(*h.mu == 1);
}

TEST_CASE("ball counts agree with the symbol-comparison oracle") {
  std::mt19937_64 rng(5);
  for (auto [p, t, n] : {std::tuple{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {5, 1, 2}}) {
    const CodeSet probe(p, t, n, {});
    std::uniform_int_distribution<std::uint64_t> pick(0, probe.vertex_count() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::uint64_t> words;
      const int size = 1 + trial % 7;
      for (int i = 0; i < size; ++i) words.push_back(pick(rng));
      const CodeSet code(p, t, n, words);
      const CodeIndex index(code);
      const auto expected = oracle::ball_counts(as_set(code), n, code.q());
      bool uniform = true;
      for (std::uint64_t v = 0; v < code.vertex_count(); ++v) {
        CHECK(index.ball_count(v) == expected[v]);
        uniform = uniform && expected[v] == expected[0];
      }
      if (code.size() < code.vertex_count()) {
        const auto r = verify_perfect_bruteforce(code);
        CHECK(r.ok() == uniform);
        if (uniform) CHECK(*r.mu == expected[0]);
      }
    }
  }
}

TEST_CASE("additive codes are multifold perfect with the double-count matrix") {
  for (auto [p, t, n, mu] : {std::tuple{2, 1, 3, 1}, {2, 1, 3, 2}, {2, 1, 5, 3}, {2, 2, 5, 1}, {2, 2, 5, 2},
                            {2, 2, 5, 4}, {2, 2, 5, 8}, {3, 1, 4, 1}, {3, 1, 4, 3}, {3, 1, 7, 5}}) {
    CAPTURE(p);
    CAPTURE(t);
    CAPTURE(n);
    CAPTURE(mu);
    const auto ms = construct_for_perfect(p, t, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(mu));
    const auto structural = verify_additive_structural(ms);
    CHECK(structural.lambda == static_cast<std::uint64_t>(mu - 1));
    CHECK(structural.mu == static_cast<std::uint64_t>(mu));
    const auto code = *kernel_code(check_matrix(ms), true).words;
    const auto brute = verify_cr1_bruteforce(code);
    REQUIRE(brute.ok());
    CHECK(*brute.matrix == structural);
    const auto perfect = verify_perfect_bruteforce(code);
    REQUIRE(perfect.ok());
    CHECK(*perfect.mu == static_cast<std::uint64_t>(mu));
    // |C| * |B| = mu * q^n
    CHECK(code.size() * ball_size(static_cast<std::uint64_t>(n), code.q()) == static_cast<std::uint64_t>(mu) * code.vertex_count());
    CHECK(verify_perfect_bruteforce(code.translate(code.vertex_count() / 3)).mu == perfect.mu);
  }
}

TEST_CASE("structural check requires spanning blocks") {
  const Multispread degenerate(Ambient{2, 1, 2}, construct_trivial(2, 1, 2, 3));
  CHECK_THROWS_AS(verify_additive_structural(degenerate), HypothesisViolated);
}

TEST_CASE("coset unions") {
  const CheckMatrix h = check_matrix(construct_for_perfect(2, 1, 3, 1));
  CHECK(coset_union(h, 1).words() == std::vector<std::uint64_t>{0, 7});

  const auto three = coset_union(h, 3);
  CHECK(three.size() == 6);
  const auto r = verify_perfect_bruteforce(three);
  REQUIRE(r.ok());
  CHECK(*r.mu == 3);
  CHECK(coset_syndromes(h, 3).size() == 3);

  CHECK_THROWS_AS(verify_perfect_bruteforce(coset_union(h, 4)), TrivialCode);
  CHECK_THROWS_AS(coset_syndromes(h, 5), std::out_of_range);
  CHECK_THROWS_AS(coset_syndromes(h, 0), std::out_of_range);
  const auto s = coset_syndromes(h, 1);
  CHECK_THROWS_AS(coset_union_for(h, {s[0], s[0]}), std::invalid_argument);
}

TEST_CASE("construct_general_perfect") {
  const auto g = construct_general_perfect(4, 5, 2);
  CHECK(g.recipe.kappa == 1);
  REQUIRE(g.code);
  CHECK(g.code->size() == 128);
  CHECK(*verify_perfect_bruteforce(*g.code).mu == 2);

  const auto c = construct_general_perfect(2, 3, 3);
  CHECK(c.recipe.kappa == 3);
  CHECK(c.syndromes.size() == 3);
  REQUIRE(c.code);
  CHECK(c.code->size() == 6);
  CHECK(*verify_perfect_bruteforce(*c.code).mu == 3);

  for (std::uint64_t mu = 1; mu < 16; ++mu) {
    const auto any = construct_general_perfect(4, 5, mu);
    REQUIRE(any.code);
    CHECK(any.code->size() * 16 == mu * 1024);
    CHECK(*verify_perfect_bruteforce(*any.code).mu == mu);
  }

  const auto lazy = construct_general_perfect(4, 13, 5, false);
  CHECK_FALSE(lazy.code);
  CHECK(lazy.matrix.m() == 3);
  CHECK_THROWS_AS(construct_general_perfect(4, 3, 5), InfeasibleParameters);
}
