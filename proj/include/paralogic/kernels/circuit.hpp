// Copyright 2026 The Paralogic Authors. All Rights Reserved.
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

// Bit-sliced boolean circuit evaluation over 256 lanes.
//
// Each lane carries one candidate model; a register holds one bit per
// lane. Programs are straight-line SSA code where registers below
// `num_inputs` are preloaded by the caller.

#ifndef PARALOGIC_KERNELS_CIRCUIT_HPP_
#define PARALOGIC_KERNELS_CIRCUIT_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace paralogic::kernels {

inline constexpr std::size_t kLanes = 256;

struct alignas(32) Lanes {
  std::uint64_t word[4];

  static constexpr Lanes zeros() { return {{0, 0, 0, 0}}; }
  static constexpr Lanes ones() {
    return {{~0ULL, ~0ULL, ~0ULL, ~0ULL}};
  }
  bool test(std::size_t lane) const {
    return (word[lane / 64] >> (lane % 64)) & 1U;
  }
  void set(std::size_t lane) { word[lane / 64] |= 1ULL << (lane % 64); }
  friend bool operator==(const Lanes&, const Lanes&) = default;
};

enum class Op : std::uint8_t { Zero, Ones, Not, And, Or, Xor, AndNot };

/// dst = op(a, b). AndNot computes a & ~b; Not reads only a.
struct Instr {
  Op op;
  std::uint32_t dst;
  std::uint32_t a;
  std::uint32_t b;
};

struct Program {
  std::uint32_t num_inputs = 0;
  std::uint32_t num_registers = 0;
  std::vector<Instr> code;
};

struct Kernel {
  const char* name;
  void (*run)(const Instr* code, std::size_t n, Lanes* regs);
  /// popcount(a & b).
  std::uint32_t (*count_and)(const Lanes& a, const Lanes& b);
  /// (a & b & ~c) != 0.
  bool (*any_and_not)(const Lanes& a, const Lanes& b, const Lanes& c);
};

const Kernel& scalar_kernel();
/// nullptr when the build target or the running CPU lacks the extension.
const Kernel* avx2_kernel();
const Kernel* neon_kernel();

/// Every kernel usable on this machine, scalar first.
std::vector<const Kernel*> available_kernels();
/// Best available kernel, overridable through PARALOGIC_KERNEL.
const Kernel& active_kernel();
const Kernel* find_kernel(std::string_view name);

}  // namespace paralogic::kernels

#endif  // PARALOGIC_KERNELS_CIRCUIT_HPP_
