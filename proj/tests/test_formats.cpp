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

#include <sstream>

#include "mspread/formats.hpp"

using namespace mspread;

namespace {

int error_line(const std::string& text, FileKind kind) {
  std::istringstream is(text);
  try {
    switch (kind) {
      case FileKind::multispread: read_multispread(is); break;
      case FileKind::code: read_code(is); break;
      case FileKind::check_matrix: read_check_matrix(is); break;
    }
  } catch (const FormatError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("multispread round trip") {
  for (auto [p, t, n, mu] : {std::tuple{2, 2, 13, 5}, {2, 1, 3, 1}, {3, 2, 10, 1}, {2, 3, 9, 2}}) {
    const auto ms = construct_for_perfect(p, t, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(mu));
    std::stringstream ss;
    write_multispread(ss, ms);
    ss.seekg(0);
    CHECK(detect_kind(ss) == FileKind::multispread);
    const SpreadFile f = read_multispread(ss);
    CHECK(f.ambient == ms.ambient());
    CHECK(f.blocks == ms.blocks());
    CHECK(f.claimed == ms.params());
  }
}

TEST_CASE("multispread text layout") {
  std::stringstream ss;
  write_multispread(ss, construct_for_perfect(2, 1, 3, 1));
  std::string header;
  std::getline(ss, header);
  CHECK(header == "2 1 2 3 0 1");

  std::istringstream commented("# three blocks\n\n2 1 2 3 0 1\n10\n01\n\n11\n");
  const auto f = read_multispread(commented);
  CHECK(f.blocks.size() == 3);
  CHECK(f.blocks[2].vectors()(1, 0) == 1);
}

TEST_CASE("code round trip, including bases above ten") {
  for (auto [p, t, n] : {std::tuple{2, 1, 5}, {2, 2, 4}, {11, 1, 3}, {2, 4, 2}}) {
    const CodeSet probe(p, t, n, {});
    std::vector<std::uint64_t> words;
    for (std::uint64_t w = 0; w < probe.vertex_count(); w += 7) words.push_back(w);
    const CodeSet code(p, t, n, words);
    std::stringstream ss;
    write_code(ss, code);
    ss.seekg(0);
    CHECK(detect_kind(ss) == FileKind::code);
    const CodeSet back = read_code(ss);
    CHECK(back.q() == code.q());
    CHECK(back.words() == code.words());
  }
  std::istringstream spaced("16 2\n15 3\n0 10\n");
  CHECK(read_code(spaced).words() == std::vector<std::uint64_t>{10, 243});
}

TEST_CASE("check matrix round trip with cosets") {
  const auto g = construct_general_perfect(2, 3, 3, false);
  std::stringstream ss;
  write_check_matrix(ss, g.matrix, g.syndromes);
  ss.seekg(0);
  CHECK(detect_kind(ss) == FileKind::check_matrix);
  const MatrixFile f = read_check_matrix(ss);
  CHECK(f.matrix.inner() == g.matrix.inner());
  CHECK(f.matrix.n() == 3);
  REQUIRE(f.syndromes.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f.syndromes[i] == g.syndromes[i]);

  std::stringstream plain;
  write_check_matrix(plain, g.matrix);
  plain.seekg(0);
  CHECK(read_check_matrix(plain).syndromes.empty());
}

TEST_CASE("errors carry line numbers") {
  CHECK(error_line("2 1 2 3 0 1\n10\n0x\n11\n", FileKind::multispread) == 3);
  CHECK(error_line("2 1 2 3 0 1\n10\n01\n", FileKind::multispread) == 4);
  CHECK(error_line("2 1 2 1 0 1\n10\n01\n", FileKind::multispread) == 3);
  CHECK(error_line("4 1 2 1 0 1\n10\n", FileKind::multispread) == 1);
  CHECK(error_line("# c\n6 2\n00\n", FileKind::code) == 2);
  CHECK(error_line("2 2\n00\n012\n", FileKind::code) == 3);
  CHECK(error_line("3 2\n02\n03\n", FileKind::code) == 3);
  CHECK(error_line("2 1 3 2\n110\n011\ncosets 2\n00\n", FileKind::check_matrix) == 6);
  CHECK(error_line("2 1 3 2\n110\n011\nextra\n", FileKind::check_matrix) == 4);
  CHECK(error_line("", FileKind::code) == 1);

  std::istringstream odd("1 2 3\n");
  CHECK_THROWS_AS(detect_kind(odd), FormatError);
}
