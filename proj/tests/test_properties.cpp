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

#include "support/properties.hpp"

namespace {

void require_clean(const props::Report& r) {
  INFO(r.name << ": " << r.failures << " of " << r.checked << " failed");
  CHECK(r.checked > 0);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("union of multispreads adds parameters") { require_clean(props::additivity()); }

TEST_CASE("block and vector order do not matter") { require_clean(props::permutation_invariance()); }

TEST_CASE("invertible coordinate changes preserve the classification") {
  require_clean(props::coordinate_change_invariance());
}

TEST_CASE("translates verify identically") { require_clean(props::translation_invariance()); }

TEST_CASE("constructor parameters") { require_clean(props::constructor_agreement()); }
