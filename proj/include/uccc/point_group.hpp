// Copyright 2026 The uccc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uccc {

/**
 * @brief Character table of an Abelian point group.
 *
 * Irreps are listed in the ORBSYM numbering used by FCIDUMP files
 * (1-based position in `irreps`). Every character is +1 or -1.
 */
struct PointGroup {
  std::string name;
  std::vector<std::string> irreps;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> characters;  // [irrep][element]

  int order() const { return static_cast<int>(elements.size()); }
  /// Index into `irreps`; matching ignores case, quotes and primes spelled as '.
  int irrep_index(std::string_view label) const;
  int product(int a, int b) const;
  int totally_symmetric() const { return 0; }
};

/// Looks up C1, Ci, Cs, C2, C2v, C2h, D2 or D2h. Non-Abelian labels such as
/// Td or C3v raise std::invalid_argument naming the group as non-Abelian.
const PointGroup& point_group(std::string_view name);

}  // namespace uccc
