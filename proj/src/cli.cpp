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

#include "mspread/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mspread/codes.hpp"
#include "mspread/formats.hpp"
#include "mspread/linalg.hpp"
#include "mspread/multispread.hpp"
#include "mspread/params.hpp"

namespace mspread::cli {

namespace {

using nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t mu = 0;
  std::uint64_t n_max = 0;
  int p = 0;
  int t = 0;
  std::string in;
  std::string out = "-";
  std::string mode = "perfect";
  bool json = false;
  bool explicit_words = false;
  bool additive = false;
};

std::string digits_str(const std::vector<std::uint64_t>& d, std::uint64_t base) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (base > 10 && i > 0) os << ' ';
    os << d[i];
  }
  return os.str();
}

std::string vec_str(const VecP& v, Residue p) {
  std::vector<std::uint64_t> d(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) d[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(v(i));
  return digits_str(d, static_cast<std::uint64_t>(p));
}

ordered_json quotient_json(const QuotientMatrix2& qm) {
  const auto e = qm.entries();
  return ordered_json::array({{e[0][0], e[0][1]}, {e[1][0], e[1][1]}});
}

std::string quotient_text(const QuotientMatrix2& qm) {
  const auto e = qm.entries();
  std::ostringstream os;
  os << "[[" << e[0][0] << ", " << e[0][1] << "], [" << e[1][0] << ", " << e[1][1] << "]]";
  return os.str();
}

ordered_json recipe_json(const Recipe& r) {
  return ordered_json{{"p", r.p},
                      {"t", r.t},
                      {"m", r.m},
                      {"k", r.k},
                      {"s", r.parts.s},
                      {"alpha", r.parts.alpha},
                      {"beta", r.parts.beta},
                      {"gamma", r.parts.gamma},
                      {"kappa", r.kappa},
                      {"mu_additive", r.mu_additive},
                      {"cardinality", r.cardinality.str()},
                      {"blocks", r.block_count()}};
}

void print_recipe(std::ostream& out, const Recipe& r) {
  out << "  |C| = " << r.cardinality.str() << " = " << r.kappa << " * " << r.p << "^" << r.k << "\n"
      << "  kappa = " << r.kappa << " coset(s) of an additive " << r.mu_additive << "-fold code\n"
      << "  m = " << r.m << ", k = " << r.k << ", s = " << r.parts.s << ", alpha = " << r.parts.alpha
      << ", beta = " << r.parts.beta << ", gamma = " << r.parts.gamma << "\n";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

template <typename Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path == "-") {
    fn(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  fn(f);
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return f;
}

int cmd_params_check(const Options& o, std::ostream& out) {
  FeasibilityVerdict v;
  std::uint64_t q = o.q;
  if (o.additive) {
    const auto pp = factor_prime_power(o.q);
    if (!pp) throw std::invalid_argument("q = " + std::to_string(o.q) + " is not a prime power");
    v = feasible_additive(pp->p, pp->t, o.n, o.mu);
  } else {
    v = feasible_general(q, o.n, o.mu);
  }
  if (o.json) {
    ordered_json j{{"query", {{"q", q}, {"n", o.n}, {"mu", o.mu}, {"additive", o.additive}}},
                   {"feasible", v.feasible},
                   {"violated", v.violated}};
    if (v.recipe) j["recipe"] = recipe_json(*v.recipe);
    out << j.dump(2) << "\n";
  } else {
    out << (o.additive ? "additive " : "") << o.mu << "-fold 1-perfect code in H(" << o.n << ", " << q
        << "): " << (v.feasible ? "feasible" : "infeasible") << "\n";
    if (v.feasible) {
      print_recipe(out, *v.recipe);
    } else {
      out << "  violated: " << join(v.violated) << "\n";
    }
  }
  return v.feasible ? kExitOk : kExitNegative;
}

int cmd_params_enum(const Options& o, std::ostream& out) {
  const auto rows = enumerate_feasible(o.q, o.n_max);
  if (o.json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json entries = ordered_json::array();
      for (const auto& e : r.entries) {
        entries.push_back({{"mu", e.mu}, {"kind", e.kind == RowKind::additive ? "additive" : "coset-union"}, {"kappa", e.kappa}});
      }
      j.push_back({{"n", r.n}, {"degenerate", r.degenerate}, {"entries", entries}});
    }
    out << ordered_json{{"q", o.q}, {"n_max", o.n_max}, {"rows", j}}.dump(2) << "\n";
    return kExitOk;
  }
  out << "q = " << o.q << ", n <= " << o.n_max << "\n";
  out << std::setw(6) << "n" << std::setw(8) << "mu" << "  " << std::left << std::setw(12) << "kind" << std::right
      << std::setw(6) << "kappa" << "\n";
  for (const auto& r : rows) {
    for (const auto& e : r.entries) {
      out << std::setw(6) << r.n << std::setw(8) << e.mu << "  " << std::left << std::setw(12)
          << (e.kind == RowKind::additive ? "additive" : "coset-union") << std::right << std::setw(6) << e.kappa
          << (r.degenerate ? "  (degenerate: n = 1)" : "") << "\n";
    }
  }
  return kExitOk;
}

int cmd_spread_construct(const Options& o, std::ostream& out) {
  const Multispread ms = construct_for_perfect(o.p, o.t, o.n, o.mu);
  with_output(o.out, out, [&](std::ostream& os) { write_multispread(os, ms); });
  if (o.out != "-") {
    const auto& a = ms.ambient();
    if (o.json) {
      out << ordered_json{{"file", o.out}, {"p", a.p}, {"t", a.t}, {"m", a.m}, {"n", ms.n()},
                          {"lambda", ms.params().lambda}, {"mu", ms.params().mu}}
                 .dump(2)
          << "\n";
    } else {
      out << "wrote (" << ms.params().lambda << ", " << ms.params().mu << ")-spread of " << ms.n() << " blocks in GF("
          << a.p << ")^" << a.m << " to " << o.out << "\n";
    }
  }
  return kExitOk;
}

int cmd_spread_verify(const Options& o, std::ostream& out) {
  auto f = open_input(o.in);
  const SpreadFile sf = read_multispread(f);
  const ClassifyResult r = classify(sf.ambient, sf.blocks);
  const bool matches = r.ok() && *r.params == sf.claimed;

  std::optional<QuotientMatrix2> qm;
  if (r.ok() && !sf.blocks.empty()) {
    try {
      qm = verify_additive_structural(Multispread(sf.ambient, sf.blocks));
    } catch (const HypothesisViolated&) {
    }
  }
  const Residue p = sf.ambient.p;
  if (o.json) {
    ordered_json j{{"property", "multispread"}, {"verified", matches},
                   {"claimed", {{"lambda", sf.claimed.lambda}, {"mu", sf.claimed.mu}}}};
    if (r.ok()) j["params"] = {{"lambda", r.params->lambda}, {"mu", r.params->mu}};
    if (qm) j["quotient_matrix"] = quotient_json(*qm);
    if (r.witness) {
      j["witness"] = {{"first", vec_str(r.witness->first, p)}, {"first_count", r.witness->first_count},
                      {"second", vec_str(r.witness->second, p)}, {"second_count", r.witness->second_count}};
    }
    out << j.dump(2) << "\n";
  } else if (r.ok()) {
    out << "(" << r.params->lambda << ", " << r.params->mu << ")-spread: " << sf.blocks.size() << " blocks, p = " << p
        << ", t = " << sf.ambient.t << ", m = " << sf.ambient.m << "\n";
    if (qm) out << "  kernel code quotient matrix " << quotient_text(*qm) << "\n";
    if (!matches) {
      out << "  header claims (" << sf.claimed.lambda << ", " << sf.claimed.mu << "): mismatch\n";
    }
  } else {
    out << "not a multispread: " << vec_str(r.witness->first, p) << " occurs " << r.witness->first_count << " times, "
        << vec_str(r.witness->second, p) << " occurs " << r.witness->second_count << " times\n";
  }
  return matches ? kExitOk : kExitNegative;
}

int cmd_code_construct(const Options& o, std::ostream& out) {
  const GeneralConstruction g = construct_general_perfect(o.q, o.n, o.mu, o.explicit_words);
  if (o.explicit_words && !g.code) {
    throw TooLargeToEnumerate("code of size " + g.recipe.cardinality.str() + " exceeds the enumeration cap",
                              static_cast<std::uint64_t>(g.recipe.k));
  }
  with_output(o.out, out, [&](std::ostream& os) {
    if (o.explicit_words) {
      write_code(os, *g.code);
    } else {
      write_check_matrix(os, g.matrix, g.syndromes);
    }
  });
  if (o.out != "-") {
    if (o.json) {
      out << ordered_json{{"file", o.out}, {"explicit", o.explicit_words}, {"recipe", recipe_json(g.recipe)}}.dump(2)
          << "\n";
    } else {
      out << "wrote " << (o.explicit_words ? "code" : "check-matrix recipe") << " for a " << o.mu
          << "-fold 1-perfect code in H(" << o.n << ", " << o.q << ") to " << o.out << "\n";
      print_recipe(out, g.recipe);
    }
  }
  return kExitOk;
}

CheckMatrix matrix_from_blocks(const SpreadFile& sf) {
  if (sf.blocks.empty()) throw std::invalid_argument("multispread file has no blocks");
  const auto n = static_cast<int>(sf.blocks.size());
  MatP inner(sf.ambient.m, static_cast<Eigen::Index>(n) * sf.ambient.t);
  for (int i = 0; i < n; ++i) {
    const auto& b = sf.blocks[static_cast<std::size_t>(i)];
    if (!b.fits(sf.ambient)) throw std::invalid_argument("block " + std::to_string(i) + " does not fit the header");
    inner.middleCols(static_cast<Eigen::Index>(i) * sf.ambient.t, sf.ambient.t) = b.vectors();
  }
  return CheckMatrix(sf.ambient.p, sf.ambient.t, n, std::move(inner));
}

CodeSet load_code(const std::string& path) {
  auto f = open_input(path);
  switch (detect_kind(f)) {
    case FileKind::code:
      return read_code(f);
    case FileKind::check_matrix: {
      const MatrixFile mf = read_check_matrix(f);
      if (mf.syndromes.empty()) return *kernel_code(mf.matrix, true).words;
      return coset_union_for(mf.matrix, mf.syndromes);
    }
    case FileKind::multispread:
      return *kernel_code(matrix_from_blocks(read_multispread(f)), true).words;
  }
  throw std::logic_error("unreachable");
}

ordered_json witness_json(const CodeSet& c, const VertexWitness& w) {
  return {{"first", digits_str(c.symbols(w.first), c.q())}, {"first_count", w.first_count},
          {"second", digits_str(c.symbols(w.second), c.q())}, {"second_count", w.second_count}};
}

int cmd_code_verify(const Options& o, std::ostream& out) {
  const CodeSet code = load_code(o.in);
  const std::uint64_t ball = ball_size(static_cast<std::uint64_t>(code.n()), code.q());
  ordered_json j{{"q", code.q()}, {"n", code.n()}, {"size", code.size()}};
  bool ok = false;
  std::ostringstream text;
  text << "H(" << code.n() << ", " << code.q() << "), |C| = " << code.size() << ": ";

  try {
    if (o.mode == "perfect") {
      j["property"] = "mu-fold-1-perfect";
      const PerfectResult r = verify_perfect_bruteforce(code);
      ok = r.ok();
      if (ok) {
        const QuotientMatrix2 qm{*r.mu - 1, *r.mu, static_cast<std::uint64_t>(code.n()), code.q()};
        const bool dc = BigInt(*r.mu) * BigInt(code.vertex_count()) == BigInt(ball) * BigInt(code.size());
        j["params"] = {{"lambda", qm.lambda}, {"mu", qm.mu}};
        j["quotient_matrix"] = quotient_json(qm);
        j["doublecount"] = dc;
        text << *r.mu << "-fold 1-perfect, quotient matrix " << quotient_text(qm) << "\n";
      } else {
        j["witness"] = witness_json(code, *r.witness);
        text << "not multifold 1-perfect: ball around " << digits_str(code.symbols(r.witness->first), code.q())
             << " holds " << r.witness->first_count << " codewords, around "
             << digits_str(code.symbols(r.witness->second), code.q()) << " holds " << r.witness->second_count << "\n";
      }
    } else {
      j["property"] = "completely-regular-radius-1";
      const Cr1Result r = verify_cr1_bruteforce(code);
      ok = r.ok();
      if (ok) {
        j["params"] = {{"lambda", r.matrix->lambda}, {"mu", r.matrix->mu}};
        j["quotient_matrix"] = quotient_json(*r.matrix);
        text << "completely regular, covering radius 1, quotient matrix " << quotient_text(*r.matrix) << "\n";
      } else {
        j["witness"] = witness_json(code, *r.witness);
        j["reason"] = r.reason;
        text << "not completely regular with covering radius 1: " << r.reason << "\n";
      }
    }
  } catch (const TrivialCode& e) {
    j["reason"] = e.what();
    text << e.what() << "\n";
  }
  j["verified"] = ok;
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return ok ? kExitOk : kExitNegative;
}

int cmd_matrix_export(const Options& o, std::ostream& out) {
  auto f = open_input(o.in);
  const CheckMatrix m = matrix_from_blocks(read_multispread(f));
  with_output(o.out, out, [&](std::ostream& os) { write_check_matrix(os, m); });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multispreads, additive completely regular codes and multifold 1-perfect codes", "mspread"};
  app.require_subcommand(1, 1);
  Options o;

  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable output"); };

  auto* pc = app.add_subcommand("params-check", "Feasibility of a mu-fold 1-perfect code in H(n, q)");
  pc->add_option("--q", o.q, "Alphabet size (prime power)")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
  pc->add_option("--n", o.n, "Code length")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 31));
  pc->add_option("--mu", o.mu, "Fold count")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  pc->add_flag("--additive", o.additive, "Require a GF(p)-linear code");
  json_flag(pc);

  auto* pe = app.add_subcommand("params-enum", "Tabulate feasible (n, mu) for n <= n-max");
  pe->add_option("--q", o.q, "Alphabet size (prime power)")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 16));
  pe->add_option("--n-max", o.n_max, "Largest length")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 16));
  json_flag(pe);

  auto* sc = app.add_subcommand("spread-construct", "Build the (mu-1, mu)-spread of an additive 1-perfect code");
  sc->add_option("--p", o.p, "Prime")->required()->check(CLI::Range(2, 1000));
  sc->add_option("--t", o.t, "Block length, q = p^t")->required()->check(CLI::Range(1, 30));
  sc->add_option("--n", o.n, "Number of blocks")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
  sc->add_option("--mu", o.mu, "Fold count")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  sc->add_option("--out", o.out, "Output file ('-' for stdout)");
  json_flag(sc);

  auto* sv = app.add_subcommand("spread-verify", "Classify a multispread file");
  sv->add_option("--in", o.in, "Multispread file")->required();
  json_flag(sv);

  auto* cc = app.add_subcommand("code-construct", "Build a mu-fold 1-perfect code in H(n, q)");
  cc->add_option("--q", o.q, "Alphabet size (prime power)")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
  cc->add_option("--n", o.n, "Code length")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
  cc->add_option("--mu", o.mu, "Fold count")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  cc->add_option("--out", o.out, "Output file ('-' for stdout)");
  cc->add_flag("--explicit", o.explicit_words, "Write every codeword instead of the check-matrix recipe");
  json_flag(cc);

  auto* cv = app.add_subcommand("code-verify", "Exhaustively verify a code, check-matrix or multispread file");
  cv->add_option("--in", o.in, "Input file")->required();
  cv->add_option("--mode", o.mode, "perfect or cr1")->check(CLI::IsMember({"perfect", "cr1"}));
  json_flag(cv);

  auto* me = app.add_subcommand("matrix-export", "Write the check matrix of a multispread file");
  me->add_option("--in", o.in, "Multispread file")->required();
  me->add_option("--out", o.out, "Output file ('-' for stdout)");
  json_flag(me);

  std::vector<std::string> argv_store{"mspread"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> dispatch{
      {pc, cmd_params_check},     {pe, cmd_params_enum},    {sc, cmd_spread_construct}, {sv, cmd_spread_verify},
      {cc, cmd_code_construct},   {cv, cmd_code_verify},    {me, cmd_matrix_export}};
  try {
    for (const auto& [sub, fn] : dispatch) {
      if (sub->parsed()) return fn(o, out);
    }
  } catch (const InfeasibleParameters& e) {
    if (o.json) {
      out << ordered_json{{"feasible", false}, {"violated", e.violated()}, {"error", e.what()}}.dump(2) << "\n";
    } else {
      out << e.what() << "\n";
    }
    return kExitNegative;
  } catch (const FormatError& e) {
    err << "mspread: " << o.in << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mspread: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mspread::cli
