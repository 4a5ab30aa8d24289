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

#include <bit>

#include "paralogic/kernels/circuit.hpp"

namespace paralogic::kernels {

namespace {

void run_scalar(const Instr* code, std::size_t n, Lanes* regs) {
  for (std::size_t i = 0; i < n; ++i) {
    const Instr& in = code[i];
    std::uint64_t* d = regs[in.dst].word;
    const std::uint64_t* a = regs[in.a].word;
    const std::uint64_t* b = regs[in.b].word;
    for (int w = 0; w < 4; ++w) {
      switch (in.op) {
        case Op::Zero: d[w] = 0; break;
        case Op::Ones: d[w] = ~0ULL; break;
        case Op::Not: d[w] = ~a[w]; break;
        case Op::And: d[w] = a[w] & b[w]; break;
        case Op::Or: d[w] = a[w] | b[w]; break;
        case Op::Xor: d[w] = a[w] ^ b[w]; break;
        case Op::AndNot: d[w] = a[w] & ~b[w]; break;
      }
    }
  }
}

std::uint32_t count_and_scalar(const Lanes& a, const Lanes& b) {
  std::uint32_t n = 0;
  for (int w = 0; w < 4; ++w)
    n += static_cast<std::uint32_t>(std::popcount(a.word[w] & b.word[w]));
  return n;
}

bool any_and_not_scalar(const Lanes& a, const Lanes& b, const Lanes& c) {
  std::uint64_t acc = 0;
  for (int w = 0; w < 4; ++w) acc |= a.word[w] & b.word[w] & ~c.word[w];
  return acc != 0;
}

}  // namespace

const Kernel& scalar_kernel() {
  static const Kernel k{"scalar", run_scalar, count_and_scalar,
                        any_and_not_scalar};
  return k;
}

}  // namespace paralogic::kernels
