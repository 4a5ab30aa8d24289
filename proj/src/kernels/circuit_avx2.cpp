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

// AVX2 variant. Compiled without -mavx2; each function carries a target
// attribute and is only reached after a runtime CPU check.

#include "paralogic/kernels/circuit.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

#define PARALOGIC_AVX2 __attribute__((target("avx2")))

namespace paralogic::kernels {

namespace {

PARALOGIC_AVX2 inline __m256i load(const Lanes& l) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(l.word));
}

PARALOGIC_AVX2 inline void store(Lanes& l, __m256i v) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(l.word), v);
}

PARALOGIC_AVX2 void run_avx2(const Instr* code, std::size_t n, Lanes* regs) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (std::size_t i = 0; i < n; ++i) {
    const Instr& in = code[i];
    __m256i r;
    switch (in.op) {
      case Op::Zero: r = _mm256_setzero_si256(); break;
      case Op::Ones: r = ones; break;
      case Op::Not: r = _mm256_xor_si256(load(regs[in.a]), ones); break;
      case Op::And:
        r = _mm256_and_si256(load(regs[in.a]), load(regs[in.b]));
        break;
      case Op::Or:
        r = _mm256_or_si256(load(regs[in.a]), load(regs[in.b]));
        break;
      case Op::Xor:
        r = _mm256_xor_si256(load(regs[in.a]), load(regs[in.b]));
        break;
      case Op::AndNot:
        r = _mm256_andnot_si256(load(regs[in.b]), load(regs[in.a]));
        break;
      default: r = _mm256_setzero_si256(); break;
    }
    store(regs[in.dst], r);
  }
}

PARALOGIC_AVX2 std::uint32_t count_and_avx2(const Lanes& a, const Lanes& b) {
  alignas(32) std::uint64_t w[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(w),
                     _mm256_and_si256(load(a), load(b)));
  return static_cast<std::uint32_t>(std::popcount(w[0]) + std::popcount(w[1]) +
                                    std::popcount(w[2]) + std::popcount(w[3]));
}

PARALOGIC_AVX2 bool any_and_not_avx2(const Lanes& a, const Lanes& b,
                                     const Lanes& c) {
  const __m256i ab = _mm256_and_si256(load(a), load(b));
  // testc(c, ab) is 1 iff (~c & ab) == 0.
  return _mm256_testc_si256(load(c), ab) == 0;
}

}  // namespace

const Kernel* avx2_kernel() {
  static const Kernel k{"avx2", run_avx2, count_and_avx2, any_and_not_avx2};
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &k : nullptr;
}

}  // namespace paralogic::kernels

#else

namespace paralogic::kernels {
const Kernel* avx2_kernel() { return nullptr; }
}  // namespace paralogic::kernels

#endif
