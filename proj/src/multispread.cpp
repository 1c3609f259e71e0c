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

#include "mspread/multispread.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mspread/linalg.hpp"

namespace mspread {

namespace {

std::string ambient_str(Residue p, int t, int m) {
  return "(p=" + std::to_string(p) + ", t=" + std::to_string(t) + ", m=" + std::to_string(m) + ")";
}

void add_span(const BlockTuple& block, Residue p, bool starred, std::vector<std::uint64_t>& counts) {
  const auto t = static_cast<unsigned>(block.t());
  const std::uint64_t combos = ipow(static_cast<std::uint64_t>(p), t);
  VecP coeffs = VecP::Zero(block.t());
  for (std::uint64_t c = 0; c < combos; ++c) {
    if (c > 0) {
      // odometer increment of the coefficient tuple
      for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
        if (++coeffs(j) < p) break;
        coeffs(j) = 0;
      }
    } else if (starred) {
      continue;
    }
    counts[vec_index(mul_mod(block.vectors(), coeffs, p), p)] += 1;
  }
}

}  // namespace

bool BlockTuple::fits(const Ambient& a) const {
  if (vectors_.rows() != a.m || vectors_.cols() != a.t) return false;
  return (vectors_.array() >= 0).all() && (vectors_.array() < a.p).all();
}

std::uint64_t MultisetCounts::at(const VecP& v) const {
  if (v.size() != m) throw std::invalid_argument("MultisetCounts::at: length mismatch");
  return counts.at(vec_index(v, p));
}

std::uint64_t MultisetCounts::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

MultisetCounts span_multiset(const BlockTuple& block, Residue p, bool starred) {
  MultisetCounts ms{p, static_cast<int>(block.m()), {}};
  ms.counts.assign(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(block.m())), 0);
  add_span(block, p, starred, ms.counts);
  return ms;
}

ClassifyResult classify(const Ambient& ambient, const std::vector<BlockTuple>& blocks) {
  if (!is_prime(ambient.p) || ambient.t < 1 || ambient.m < 1) {
    throw std::invalid_argument("classify: invalid ambient " + ambient_str(ambient.p, ambient.t, ambient.m));
  }
  std::vector<std::uint64_t> counts(ambient.space_size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].fits(ambient)) {
      throw std::invalid_argument("classify: block " + std::to_string(i) + " is not a " + std::to_string(ambient.t) +
                                  "-tuple over " + ambient_str(ambient.p, ambient.t, ambient.m));
    }
    add_span(blocks[i], ambient.p, true, counts);
  }

  ClassifyResult result;
  const std::uint64_t mu = counts[1];
  for (std::uint64_t i = 2; i < counts.size(); ++i) {
    if (counts[i] != mu) {
      result.witness = ClassifyWitness{vec_from_index(1, ambient.m, ambient.p), mu,
                                       vec_from_index(i, ambient.m, ambient.p), counts[i]};
      return result;
    }
  }
  result.params = SpreadParams{counts[0], mu};
  return result;
}

Multispread::Multispread(Ambient ambient, std::vector<BlockTuple> blocks)
    : ambient_(ambient), blocks_(std::move(blocks)) {
  const ClassifyResult r = classify(ambient_, blocks_);
  if (!r.ok()) {
    throw NotAMultispread("nonzero vectors have unequal multiplicities (" + std::to_string(r.witness->first_count) +
                          " vs " + std::to_string(r.witness->second_count) + ")");
  }
  params_ = *r.params;
  const std::uint64_t pt1 = ipow(static_cast<std::uint64_t>(ambient_.p), static_cast<unsigned>(ambient_.t)) - 1;
  if (params_.lambda + params_.mu * (ambient_.space_size() - 1) != blocks_.size() * pt1) {
    throw std::logic_error("Multispread: counting identity violated");
  }
}

Multispread::Multispread(Ambient ambient, std::vector<BlockTuple> blocks, SpreadParams claimed)
    : Multispread(ambient, std::move(blocks)) {
  if (!(params_ == claimed)) {
    throw NotAMultispread("claimed (" + std::to_string(claimed.lambda) + ", " + std::to_string(claimed.mu) +
                          ") but blocks form a (" + std::to_string(params_.lambda) + ", " +
                          std::to_string(params_.mu) + ")-spread");
  }
}

Multispread concat(const Multispread& a, const Multispread& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("concat: ambient mismatch");
  std::vector<BlockTuple> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return Multispread(a.ambient(), std::move(blocks),
                     SpreadParams{a.params().lambda + b.params().lambda, a.params().mu + b.params().mu});
}

std::vector<BlockTuple> construct_trivial(Residue p, int t, int m, std::uint64_t alpha) {
  if (!is_prime(p) || t < 1 || m < 1) throw std::invalid_argument("construct_trivial: invalid " + ambient_str(p, t, m));
  return std::vector<BlockTuple>(alpha, BlockTuple::zero(m, t));
}

std::vector<BlockTuple> construct_fold_spread(Residue p, int t, int m) {
  if (t < 1 || t > m) throw std::invalid_argument("construct_fold_spread: requires 1 <= t <= m, got " + ambient_str(p, t, m));
  const FieldCtx field(p, m);
  std::vector<BlockTuple> blocks;
  for (std::uint64_t idx = 1; idx < field.order(); ++idx) {
    const FieldElem v = field.from_index(idx);
    const auto lead = std::find_if(v.coeffs.begin(), v.coeffs.end(), [](Residue c) { return c != 0; });
    if (*lead != 1) continue;
    MatP cols(m, t);
    for (int j = 0; j < t; ++j) cols.col(j) = elem_to_vec(field, field.mul(v, field.basis(j)));
    blocks.emplace_back(std::move(cols));
  }
  return blocks;
}

std::vector<BlockTuple> construct_subfield_spread(Residue p, int t, int m_ext) {
  if (t < 1 || m_ext < 1 || m_ext % t != 0) {
    throw std::invalid_argument("construct_subfield_spread: t must divide m', got " + ambient_str(p, t, m_ext));
  }
  const FieldCtx field(p, m_ext);
  const FieldElem g = field.primitive_element();
  const std::uint64_t sub_units = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(t)) - 1;
  const std::uint64_t cosets = (field.order() - 1) / sub_units;
  const FieldElem z = field.pow(g, cosets);  // generates GF(p^t)^*

  std::vector<FieldElem> sub_basis;
  FieldElem zj = field.one();
  for (int j = 0; j < t; ++j) {
    sub_basis.push_back(zj);
    zj = field.mul(zj, z);
  }

  std::vector<BlockTuple> blocks;
  FieldElem gi = field.one();
  for (std::uint64_t i = 0; i < cosets; ++i) {
    MatP cols(m_ext, t);
    for (int j = 0; j < t; ++j) cols.col(j) = elem_to_vec(field, field.mul(gi, sub_basis[static_cast<std::size_t>(j)]));
    blocks.emplace_back(std::move(cols));
    gi = field.mul(gi, g);
  }
  return blocks;
}

std::vector<BlockTuple> construct_projected(Residue p, int t, int m, int s) {
  if (s < 0 || m < 1 || t < 1 || (m + s) % t != 0) {
    throw std::invalid_argument("construct_projected: t must divide m + s, got " + ambient_str(p, t, m) +
                                " s=" + std::to_string(s));
  }
  std::vector<BlockTuple> blocks = construct_subfield_spread(p, t, m + s);
  for (auto& b : blocks) b = BlockTuple(b.vectors().topRows(m));
  return blocks;
}

Multispread construct_sum(Residue p, int t, int m, std::uint64_t alpha, std::uint64_t beta, std::uint64_t gamma) {
  if (gamma > 0 && t > m) throw std::invalid_argument("construct_sum: gamma > 0 requires t <= m");
  const int s = (t - m % t) % t;
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t ps = ipow(up, static_cast<unsigned>(s));
  const std::uint64_t pt1 = ipow(up, static_cast<unsigned>(t)) - 1;

  std::vector<BlockTuple> blocks = construct_trivial(p, t, m, alpha);
  if (beta > 0) {
    const auto projected = construct_projected(p, t, m, s);
    for (std::uint64_t i = 0; i < beta; ++i) blocks.insert(blocks.end(), projected.begin(), projected.end());
  }
  if (gamma > 0) {
    const auto fold = construct_fold_spread(p, t, m);
    for (std::uint64_t i = 0; i < gamma; ++i) blocks.insert(blocks.end(), fold.begin(), fold.end());
  }
  const SpreadParams expected{alpha * pt1 + beta * (ps - 1), beta * ps + gamma * (pt1 / (up - 1))};
  return Multispread(Ambient{p, t, m}, std::move(blocks), expected);
}

Multispread construct_for_recipe(const Recipe& r) {
  Multispread ms = construct_sum(r.p, r.t, r.m, r.parts.alpha, r.parts.beta, r.parts.gamma);
  const SpreadParams want{r.mu_additive - 1, r.mu_additive};
  if (ms.n() != r.n || !(ms.params() == want)) {
    throw std::logic_error("construct_for_recipe: constructed spread does not match the recipe");
  }
  return ms;
}

Multispread construct_for_perfect(Residue p, int t, std::uint64_t n, std::uint64_t mu) {
  const FeasibilityVerdict v = feasible_additive(p, t, n, mu);
  if (!v.feasible) {
    std::string names;
    for (const auto& c : v.violated) names += (names.empty() ? "" : ", ") + c;
    throw InfeasibleParameters("no GF(p)-linear " + std::to_string(mu) + "-fold 1-perfect code in H(" +
                                   std::to_string(n) + ", " + std::to_string(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(t))) +
                                   "): violated " + names,
                               v.violated);
  }
  return construct_for_recipe(*v.recipe);
}

}  // namespace mspread
