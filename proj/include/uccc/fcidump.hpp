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

#include <stdexcept>
#include <string>
#include <string_view>

#include "uccc/model.hpp"

namespace uccc {

class FcidumpError : public std::runtime_error {
 public:
  FcidumpError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "FCIDUMP line " + std::to_string(line) + ": " + what
                                    : "FCIDUMP: " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/**
 * Reads a FCIDUMP namelist (`&FCI NORB=.., NELEC=.., MS2=.., ORBSYM=.., &END`)
 * followed by `value i j k l` records with 1-based chemist-order indices.
 *
 * ORBSYM entries are decoded against `point_group`. When `point_group` is
 * empty the group is C1, which accepts only ORBSYM=1. The reference
 * determinant fills the lowest orbitals with (NELEC+MS2)/2 alpha and
 * (NELEC-MS2)/2 beta electrons.
 */
MolecularModel parse_fcidump(std::string_view text, std::string_view point_group = {});
MolecularModel load_fcidump(const std::string& path, std::string_view point_group = {});

/// Writes the unique integrals with 17 significant digits.
std::string export_fcidump(const MolecularModel& m);

}  // namespace uccc
