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
#include <vector>

#include "mspread/ff.hpp"
#include "mspread/params.hpp"

/// (lambda, mu)-spreads: collections of t-multisubspaces of GF(p)^m whose
/// nontrivial spans cover the zero vector lambda times and every nonzero
/// vector exactly mu times.
namespace mspread {

struct Ambient {
  Residue p = 2;
  int t = 1;
  int m = 1;

  std::uint64_t space_size() const { return ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(m)); }
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// t vectors of GF(p)^m, stored as the columns of an m x t matrix.
class BlockTuple {
 public:
  BlockTuple() = default;
  explicit BlockTuple(MatP vectors) : vectors_(std::move(vectors)) {}
  static BlockTuple zero(int m, int t) { return BlockTuple(MatP::Zero(m, t)); }

  const MatP& vectors() const { return vectors_; }
  Eigen::Index t() const { return vectors_.cols(); }
  Eigen::Index m() const { return vectors_.rows(); }
  VecP vector(Eigen::Index j) const { return vectors_.col(j); }

  bool fits(const Ambient& a) const;

  friend bool operator==(const BlockTuple& a, const BlockTuple& b) {
    return a.vectors_.rows() == b.vectors_.rows() && a.vectors_.cols() == b.vectors_.cols() && a.vectors_ == b.vectors_;
  }

 private:
  MatP vectors_;
};

/// Dense multiplicity table over GF(p)^m, indexed by vec_index.
struct MultisetCounts {
  Residue p = 2;
  int m = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(const VecP& v) const;
  std::uint64_t total() const;
};

struct SpreadParams {
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  friend bool operator==(const SpreadParams&, const SpreadParams&) = default;
};

/// Two nonzero vectors with different multiplicities.
struct ClassifyWitness {
  VecP first;
  std::uint64_t first_count = 0;
  VecP second;
  std::uint64_t second_count = 0;
};

struct ClassifyResult {
  std::optional<SpreadParams> params;
  std::optional<ClassifyWitness> witness;

  bool ok() const { return params.has_value(); }
};

class NotAMultispread : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MultisetCounts span_multiset(const BlockTuple& block, Residue p, bool starred);

/// Throws std::invalid_argument if a block does not fit `ambient`.
ClassifyResult classify(const Ambient& ambient, const std::vector<BlockTuple>& blocks);

class Multispread {
 public:
  /// Classifies `blocks`; throws NotAMultispread on failure.
  Multispread(Ambient ambient, std::vector<BlockTuple> blocks);
  /// Also requires the classification to equal `claimed`.
  Multispread(Ambient ambient, std::vector<BlockTuple> blocks, SpreadParams claimed);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<BlockTuple>& blocks() const { return blocks_; }
  const SpreadParams& params() const { return params_; }
  std::size_t n() const { return blocks_.size(); }

 private:
  Ambient ambient_;
  std::vector<BlockTuple> blocks_;
  SpreadParams params_;
};

/// Union of two multispreads over the same ambient space.
Multispread concat(const Multispread& a, const Multispread& b);

std::vector<BlockTuple> construct_trivial(Residue p, int t, int m, std::uint64_t alpha);
std::vector<BlockTuple> construct_fold_spread(Residue p, int t, int m);
std::vector<BlockTuple> construct_subfield_spread(Residue p, int t, int m_ext);
std::vector<BlockTuple> construct_projected(Residue p, int t, int m, int s);
Multispread construct_sum(Residue p, int t, int m, std::uint64_t alpha, std::uint64_t beta, std::uint64_t gamma);

class InfeasibleParameters : public std::domain_error {
 public:
  InfeasibleParameters(const std::string& what, std::vector<std::string> violated)
      : std::domain_error(what), violated_(std::move(violated)) {}
  const std::vector<std::string>& violated() const { return violated_; }

 private:
  std::vector<std::string> violated_;
};

/// (mu - 1, mu)-spread with n blocks in GF(p)^m, the check-matrix columns of
/// an additive mu-fold 1-perfect code in H(n, p^t).
Multispread construct_for_perfect(Residue p, int t, std::uint64_t n, std::uint64_t mu);
Multispread construct_for_recipe(const Recipe& recipe);

}  // namespace mspread
