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

#include "uccc/point_group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace uccc {

namespace {

std::string normalize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<PointGroup> build_tables() {
  std::vector<PointGroup> t;
  t.push_back({"C1", {"A"}, {"E"}, {{1}}});
  t.push_back({"Ci", {"Ag", "Au"}, {"E", "i"}, {{1, 1}, {1, -1}}});
  t.push_back({"Cs", {"A'", "A''"}, {"E", "sigma_h"}, {{1, 1}, {1, -1}}});
  t.push_back({"C2", {"A", "B"}, {"E", "C2"}, {{1, 1}, {1, -1}}});
  t.push_back({"C2v",
               {"A1", "B1", "B2", "A2"},
               {"E", "C2", "sigma_v(xz)", "sigma_v(yz)"},
               {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}});
  t.push_back({"C2h",
               {"Ag", "Au", "Bu", "Bg"},
               {"E", "C2", "i", "sigma_h"},
               {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}}});
  t.push_back({"D2",
               {"A", "B3", "B2", "B1"},
               {"E", "C2(z)", "C2(y)", "C2(x)"},
               {{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}}});
  t.push_back({"D2h",
               {"Ag", "B3u", "B2u", "B1g", "B1u", "B2g", "B3g", "Au"},
               {"E", "C2(z)", "C2(y)", "C2(x)", "i", "sigma(xy)", "sigma(xz)", "sigma(yz)"},
               {{1, 1, 1, 1, 1, 1, 1, 1},
                {1, -1, -1, 1, -1, 1, 1, -1},
                {1, -1, 1, -1, -1, 1, -1, 1},
                {1, 1, -1, -1, 1, 1, -1, -1},
                {1, 1, -1, -1, -1, -1, 1, 1},
                {1, -1, 1, -1, 1, -1, 1, -1},
                {1, -1, -1, 1, 1, -1, -1, 1},
                {1, 1, 1, 1, -1, -1, -1, -1}}});
  return t;
}

constexpr std::array<std::string_view, 14> kNonAbelian = {
    "c3v", "c4v", "c6v", "d3", "d3h", "d3d", "d4h", "d6h", "td", "oh", "o", "t", "ih", "c3"};

}  // namespace

int PointGroup::irrep_index(std::string_view label) const {
  const std::string want = normalize(label);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (normalize(irreps[i]) == want) return static_cast<int>(i);
  }
  throw std::invalid_argument("irrep '" + std::string(label) + "' is not in point group " + name);
}

int PointGroup::product(int a, int b) const {
  std::vector<int> chi(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) {
    chi[e] = characters[static_cast<std::size_t>(a)][e] * characters[static_cast<std::size_t>(b)][e];
  }
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (characters[i] == chi) return static_cast<int>(i);
  }
  throw std::logic_error("character table of " + name + " is not closed");
}

const PointGroup& point_group(std::string_view name) {
  static const std::vector<PointGroup> tables = build_tables();
  const std::string want = normalize(name);
  for (const PointGroup& g : tables) {
    if (normalize(g.name) == want) return g;
  }
  if (std::find(kNonAbelian.begin(), kNonAbelian.end(), want) != kNonAbelian.end()) {
    throw std::invalid_argument("point group " + std::string(name) +
                                " is non-Abelian; supply its largest Abelian subgroup");
  }
  throw std::invalid_argument("unknown point group '" + std::string(name) + "'");
}

}  // namespace uccc
