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

// NEON variant: a 256-lane register is two q-register pairs. NEON is
// mandatory on AArch64, so no runtime check is needed there.

#include "paralogic/kernels/circuit.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace paralogic::kernels {

namespace {

void run_neon(const Instr* code, std::size_t n, Lanes* regs) {
  for (std::size_t i = 0; i < n; ++i) {
    const Instr& in = code[i];
    std::uint64_t* d = regs[in.dst].word;
    const std::uint64_t* a = regs[in.a].word;
    const std::uint64_t* b = regs[in.b].word;
    for (int h = 0; h < 4; h += 2) {
      const uint64x2_t va = vld1q_u64(a + h);
      const uint64x2_t vb = vld1q_u64(b + h);
      uint64x2_t r;
      switch (in.op) {
        case Op::Zero: r = vdupq_n_u64(0); break;
        case Op::Ones: r = vdupq_n_u64(~0ULL); break;
        case Op::Not:
          r = vreinterpretq_u64_u8(vmvnq_u8(vreinterpretq_u8_u64(va)));
          break;
        case Op::And: r = vandq_u64(va, vb); break;
        case Op::Or: r = vorrq_u64(va, vb); break;
        case Op::Xor: r = veorq_u64(va, vb); break;
        case Op::AndNot: r = vbicq_u64(va, vb); break;
        default: r = vdupq_n_u64(0); break;
      }
      vst1q_u64(d + h, r);
    }
  }
}

std::uint32_t count_and_neon(const Lanes& a, const Lanes& b) {
  std::uint32_t n = 0;
  for (int h = 0; h < 4; h += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a.word + h), vld1q_u64(b.word + h));
    n += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
  }
  return n;
}

bool any_and_not_neon(const Lanes& a, const Lanes& b, const Lanes& c) {
  uint64x2_t acc = vdupq_n_u64(0);
  for (int h = 0; h < 4; h += 2) {
    const uint64x2_t ab = vandq_u64(vld1q_u64(a.word + h), vld1q_u64(b.word + h));
    acc = vorrq_u64(acc, vbicq_u64(ab, vld1q_u64(c.word + h)));
  }
  return vmaxvq_u32(vreinterpretq_u32_u64(acc)) != 0;
}

}  // namespace

const Kernel* neon_kernel() {
  static const Kernel k{"neon", run_neon, count_and_neon, any_and_not_neon};
  return &k;
}

}  // namespace paralogic::kernels

#else

namespace paralogic::kernels {
const Kernel* neon_kernel() { return nullptr; }
}  // namespace paralogic::kernels

#endif
