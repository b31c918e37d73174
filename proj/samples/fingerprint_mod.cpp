// Copyright 2026 The qobdd Authors
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

// Compiles MOD_3 on 10 bits into a quantum OBDD and prints the acceptance
// probability of a few inputs next to the closed form.

#include <cstdio>

#include "qobdd/qobdd.hpp"

int main() {
  using namespace qobdd;
  const LinearPolynomial g = mod_polynomial(10, 3);
  const GoodSetSelection selection = select_good_set(0.2, g.modulus(), /*seed=*/1);
  const SingleCompilation compiled = compile_single(g, selection.set);
  const ProgramMetrics m = metrics(compiled.program);
  std::printf("t=%zu width=%zu qubits=%zu length=%zu\n", compiled.good_set.size(), m.width, m.qubits, m.length);
  for (const char *input : {"0000000000", "1110000000", "1100000000", "1111111111"}) {
    const Bits sigma = parse_bits(input);
    std::printf("%s  accept=%.6f  closed-form=%.6f\n", input, accept_probability(compiled.program, sigma),
                closed_form_single(g, compiled.good_set, sigma));
  }
}
