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

// Plain-text file formats. Digit rows are written as one unbroken string
// when the base is at most 10 and as space-separated integers otherwise;
// the readers accept either form. Blank lines and '#' comment lines are
// ignored.
//
//   multispread:  "p t m n lambda mu", then n rows of t*m digits
//                 (block vectors concatenated, coordinate 0 first)
//   code:         "q n", then one row of n base-q digits per word
//   check matrix: "p t n m", then m rows of n*t digits, optionally
//                 followed by "cosets K" and K rows of m syndrome digits

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mspread/codes.hpp"
#include "mspread/multispread.hpp"

namespace mspread {

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct SpreadFile {
  Ambient ambient;
  std::vector<BlockTuple> blocks;
  SpreadParams claimed;
};

struct MatrixFile {
  CheckMatrix matrix;
  std::vector<VecP> syndromes;
};

enum class FileKind { multispread, code, check_matrix };

void write_multispread(std::ostream& os, const Multispread& ms);
SpreadFile read_multispread(std::istream& is);

void write_code(std::ostream& os, const CodeSet& code);
CodeSet read_code(std::istream& is);

void write_check_matrix(std::ostream& os, const CheckMatrix& m, const std::vector<VecP>& syndromes = {});
MatrixFile read_check_matrix(std::istream& is);

/// Inspects the header (first significant line) without consuming the stream.
FileKind detect_kind(std::istream& is);

}  // namespace mspread
