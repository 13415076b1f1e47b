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

#include <array>
#include <cstdint>

namespace uccc {

/**
 * @brief Philox4x32-10 counter-based generator (Salmon et al., SC'11).
 *
 * A block is a pure function of a 128-bit counter and a 64-bit key, so any
 * shot can be regenerated from (seed, shot index) alone.
 */
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

/// Sequential uniform draws for one (seed, stream) pair.
class ShotRng {
 public:
  ShotRng(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  /// Uniform double in [0, 1) built from the top 53 bits of a 64-bit word.
  double uniform();
  /// Uniform integer in [0, n).
  std::uint32_t below(std::uint32_t n);

 private:
  std::uint64_t next_u64();

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace uccc
