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

#include "mspread/formats.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace mspread {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  /// Next significant line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> require(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) throw FormatError(line_no_ + 1, std::string("unexpected end of file, expected ") + what);
    return tokens;
  }

  int line() const { return line_no_; }

 private:
  std::istream& is_;
  int line_no_ = 0;
};

std::uint64_t parse_uint(const std::string& tok, int line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + tok + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_header(LineReader& in, std::size_t fields, const char* layout) {
  const auto tokens = in.require("header");
  if (tokens.size() != fields) {
    throw FormatError(in.line(), std::string("header must be '") + layout + "'");
  }
  std::vector<std::uint64_t> out;
  for (const auto& tok : tokens) out.push_back(parse_uint(tok, in.line(), "header field"));
  return out;
}

std::vector<std::uint64_t> parse_digits(const std::vector<std::string>& tokens, std::size_t count, std::uint64_t base,
                                        int line) {
  std::vector<std::uint64_t> out;
  if (tokens.size() == 1 && base <= 10 && tokens.front().size() == count) {
    for (char ch : tokens.front()) {
      if (ch < '0' || ch > '9') throw FormatError(line, std::string("invalid digit '") + ch + "'");
      out.push_back(static_cast<std::uint64_t>(ch - '0'));
    }
  } else if (tokens.size() == count) {
    for (const auto& tok : tokens) out.push_back(parse_uint(tok, line, "digit"));
  } else {
    throw FormatError(line, "expected " + std::to_string(count) + " digits");
  }
  for (auto d : out) {
    if (d >= base) throw FormatError(line, "digit " + std::to_string(d) + " out of range for base " + std::to_string(base));
  }
  return out;
}

template <typename It>
void write_digits(std::ostream& os, It begin, It end, std::uint64_t base) {
  bool first = true;
  for (auto it = begin; it != end; ++it) {
    if (base > 10 && !first) os << ' ';
    os << static_cast<std::uint64_t>(*it);
    first = false;
  }
  os << '\n';
}

Residue checked_prime(std::uint64_t p, int line) {
  if (p > 1000000 || !is_prime(static_cast<std::int64_t>(p))) throw FormatError(line, "p = " + std::to_string(p) + " is not prime");
  return static_cast<Residue>(p);
}

int checked_small(std::uint64_t v, int line, const char* what) {
  if (v < 1 || v > 64) throw FormatError(line, std::string(what) + " must be in [1, 64]");
  return static_cast<int>(v);
}

}  // namespace

void write_multispread(std::ostream& os, const Multispread& ms) {
  const auto& a = ms.ambient();
  os << a.p << ' ' << a.t << ' ' << a.m << ' ' << ms.n() << ' ' << ms.params().lambda << ' ' << ms.params().mu << '\n';
  for (const auto& b : ms.blocks()) {
    std::vector<Residue> row;
    for (Eigen::Index j = 0; j < b.t(); ++j) {
      for (Eigen::Index i = 0; i < b.m(); ++i) row.push_back(b.vectors()(i, j));
    }
    write_digits(os, row.begin(), row.end(), static_cast<std::uint64_t>(a.p));
  }
}

SpreadFile read_multispread(std::istream& is) {
  LineReader in(is);
  const auto h = parse_header(in, 6, "p t m n lambda mu");
  const int hl = in.line();
  SpreadFile f;
  f.ambient = Ambient{checked_prime(h[0], hl), checked_small(h[1], hl, "t"), checked_small(h[2], hl, "m")};
  if (f.ambient.space_size() > (std::uint64_t{1} << 30)) throw FormatError(hl, "p^m too large");
  f.claimed = SpreadParams{h[4], h[5]};
  const auto n = h[3];
  const auto width = static_cast<std::size_t>(f.ambient.t * f.ambient.m);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto tokens = in.require("block row");
    const auto digits = parse_digits(tokens, width, static_cast<std::uint64_t>(f.ambient.p), in.line());
    MatP v(f.ambient.m, f.ambient.t);
    for (int j = 0; j < f.ambient.t; ++j) {
      for (int r = 0; r < f.ambient.m; ++r) v(r, j) = static_cast<Residue>(digits[static_cast<std::size_t>(j * f.ambient.m + r)]);
    }
    f.blocks.emplace_back(std::move(v));
  }
  std::vector<std::string> extra;
  if (in.next(extra)) throw FormatError(in.line(), "trailing data after " + std::to_string(n) + " blocks");
  return f;
}

void write_code(std::ostream& os, const CodeSet& code) {
  os << code.q() << ' ' << code.n() << '\n';
  for (auto w : code.words()) {
    const auto sym = code.symbols(w);
    write_digits(os, sym.begin(), sym.end(), code.q());
  }
}

CodeSet read_code(std::istream& is) {
  LineReader in(is);
  const auto h = parse_header(in, 2, "q n");
  const int hl = in.line();
  const auto pp = factor_prime_power(h[0]);
  if (!pp) throw FormatError(hl, "q = " + std::to_string(h[0]) + " is not a prime power");
  const int n = checked_small(h[1], hl, "n");
  std::vector<std::vector<std::uint64_t>> words;
  std::vector<std::string> tokens;
  while (in.next(tokens)) words.push_back(parse_digits(tokens, static_cast<std::size_t>(n), h[0], in.line()));
  try {
    return CodeSet::from_symbols(h[0], n, words);
  } catch (const std::invalid_argument& e) {
    throw FormatError(hl, e.what());
  }
}

void write_check_matrix(std::ostream& os, const CheckMatrix& m, const std::vector<VecP>& syndromes) {
  const auto p = static_cast<std::uint64_t>(m.p());
  os << m.p() << ' ' << m.t() << ' ' << m.n() << ' ' << m.m() << '\n';
  for (Eigen::Index r = 0; r < m.inner().rows(); ++r) {
    const VecP row = m.inner().row(r).transpose();
    write_digits(os, row.data(), row.data() + row.size(), p);
  }
  if (!syndromes.empty()) {
    os << "cosets " << syndromes.size() << '\n';
    for (const auto& s : syndromes) write_digits(os, s.data(), s.data() + s.size(), p);
  }
}

MatrixFile read_check_matrix(std::istream& is) {
  LineReader in(is);
  const auto h = parse_header(in, 4, "p t n m");
  const int hl = in.line();
  const Residue p = checked_prime(h[0], hl);
  const int t = checked_small(h[1], hl, "t");
  if (h[2] < 1 || h[2] > 4096) throw FormatError(hl, "n must be in [1, 4096]");
  const auto n = static_cast<int>(h[2]);
  const int m = checked_small(h[3], hl, "m");
  const auto width = static_cast<std::size_t>(n) * static_cast<std::size_t>(t);
  MatP inner(m, static_cast<Eigen::Index>(width));
  for (int r = 0; r < m; ++r) {
    const auto tokens = in.require("matrix row");
    const auto digits = parse_digits(tokens, width, static_cast<std::uint64_t>(p), in.line());
    for (std::size_t c = 0; c < width; ++c) inner(r, static_cast<Eigen::Index>(c)) = static_cast<Residue>(digits[c]);
  }
  MatrixFile f{CheckMatrix(p, t, n, std::move(inner)), {}};

  std::vector<std::string> tokens;
  if (!in.next(tokens)) return f;
  if (tokens.size() != 2 || tokens[0] != "cosets") throw FormatError(in.line(), "expected 'cosets K' or end of file");
  const auto kappa = parse_uint(tokens[1], in.line(), "coset count");
  for (std::uint64_t i = 0; i < kappa; ++i) {
    const auto row = in.require("syndrome row");
    const auto digits = parse_digits(row, static_cast<std::size_t>(m), static_cast<std::uint64_t>(p), in.line());
    VecP s(m);
    for (int r = 0; r < m; ++r) s(r) = static_cast<Residue>(digits[static_cast<std::size_t>(r)]);
    f.syndromes.push_back(std::move(s));
  }
  if (in.next(tokens)) throw FormatError(in.line(), "trailing data after syndromes");
  return f;
}

FileKind detect_kind(std::istream& is) {
  const auto start = is.tellg();
  LineReader in(is);
  std::vector<std::string> tokens;
  const bool got = in.next(tokens);
  const int line = in.line();
  is.clear();
  is.seekg(start);
  if (!got) throw FormatError(1, "empty file");
  switch (tokens.size()) {
    case 2:
      return FileKind::code;
    case 4:
      return FileKind::check_matrix;
    case 6:
      return FileKind::multispread;
    default:
      throw FormatError(line, "unrecognized header: expected 2 (code), 4 (check matrix) or 6 (multispread) fields");
  }
}

}  // namespace mspread
