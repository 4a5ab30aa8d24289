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

#include <cstdlib>
#include <string>

#include "paralogic/kernels/circuit.hpp"

namespace paralogic::kernels {

std::vector<const Kernel*> available_kernels() {
  std::vector<const Kernel*> out{&scalar_kernel()};
  if (const Kernel* k = avx2_kernel()) out.push_back(k);
  if (const Kernel* k = neon_kernel()) out.push_back(k);
  return out;
}

const Kernel* find_kernel(std::string_view name) {
  for (const Kernel* k : available_kernels())
    if (name == k->name) return k;
  return nullptr;
}

const Kernel& active_kernel() {
  static const Kernel& chosen = []() -> const Kernel& {
    if (const char* env = std::getenv("PARALOGIC_KERNEL")) {
      if (const Kernel* k = find_kernel(env)) return *k;
    }
    return *available_kernels().back();
  }();
  return chosen;
}

}  // namespace paralogic::kernels
