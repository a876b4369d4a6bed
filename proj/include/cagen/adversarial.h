// Copyright 2026 The cagen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Worst-case inputs: the meshed construction that keeps a counter-assisted
// generator inside alpha + beta states, Eulerian sequences with the
// isolated-equality property, and the gallery of weak counter-dependent
// modifications with their failing f.
//
// Meshed construction (modular addition, combiner x_i = f(x_{i-1}) + i):
//
//   a_r = y + 2 + 2 beta r       f(a_r) = x - 2 beta r          r < alpha
//   b_j = x + 1 + 2j             f(b_j) = y - 2j                j < beta - 1
//   b_{beta-1} = x - 1 + 2 beta  f(b_{beta-1}) = y + 2
//
// With 2 alpha beta = n the run from a_0 visits a_r, b_0, a_r, b_1, ...,
// a_r, b_{beta-1} for r = 0, 1, ..., alpha - 1 and returns to a_0 after n
// steps. The xor version (x_i = f(x_{i-1}) xor i, n = 4^e, 2 beta = sqrt n):
//
//   a_r = (y xor 2) xor 2 beta r      f(a_r) = x xor 2 beta r
//   b_j = x xor (2j + 1)              f(b_j) = (y xor 2) xor (2j + 2)
//   f(b_{beta-1}) = y xor 2
//
// which works because 2 beta r and any value below 2 beta share no bits.

#ifndef CAGEN_ADVERSARIAL_H_
#define CAGEN_ADVERSARIAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cagen/function_table.h"
#include "cagen/generator.h"
#include "cagen/statespace.h"

namespace cagen {

enum class MeshedVariant {
  kSquareAddMod,        // n / 2 a perfect square, alpha = beta
  kPowerOfTwoAddMod,    // n = 4^e, alpha = sqrt n, beta = sqrt n / 2
  kGeneralFloorAddMod,  // any even n, alpha = beta = floor(sqrt(n / 2))
  kPowerOfTwoXor,       // n = 4^e, xor combiner
  kCustomAddMod,        // caller-chosen alpha, beta with 2 alpha beta = n
};

std::string_view meshed_variant_name(MeshedVariant v);
// Throws ConfigError on unknown names.
MeshedVariant meshed_variant_from_name(std::string_view name);

struct MeshedConstruction {
  std::uint64_t n = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  state_t x = 0;
  state_t y = 0;
  MeshedVariant variant = MeshedVariant::kSquareAddMod;
  FunctionTable f = FunctionTable::constant(StateSpace(1), 0);
  std::vector<state_t> a_values;
  std::vector<state_t> b_values;
  // 2 alpha beta; below n only for the general variant, where f(v) is
  // f_m(v mod m) for the construction f_m on {0..m-1}.
  std::uint64_t modulus = 0;

  LatinOp op() const;
  // The counter-assisted generator <f, identity> with the variant's op.
  GeneratorSpec generator() const;
  // a_0.
  state_t seed() const { return a_values.front(); }
  // Period of the run from a_0 and its number of distinct states, when the
  // construction pins them (every variant except the general one).
  std::optional<std::uint64_t> expected_period() const;
  std::optional<std::uint64_t> expected_total() const;
  // Upper bound on the total diversity: (alpha + beta) ceil(n / modulus).
  std::uint64_t total_bound() const;
  // Row-major traversal of the meshing matrix with rows
  // (a_r, b_0, a_r, b_1, ..., a_r, b_{beta-1}); length 2 alpha beta.
  std::vector<state_t> traversal() const;
};

struct MeshedOptions {
  state_t x = 0;
  state_t y = 0;
  // Fill f outside the a and b values from this seed instead of with 0.
  std::optional<std::uint64_t> random_fill_seed;
  // For kCustomAddMod.
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
};

// Throws ConstructionError naming the violated constraint.
MeshedConstruction build_meshed(std::uint64_t n, MeshedVariant variant,
                                const MeshedOptions& options = {});

MeshedConstruction build_meshed_xor(std::uint64_t n, state_t x = 0,
                                    state_t y = 0);

// Vertex sequence of the lexicographically first Eulerian circuit from 0 of
// the complete digraph with self-loops on nu vertices: length nu^2 + 1.
// Throws DomainError for nu == 0.
std::vector<state_t> eulerian_sequence(std::uint64_t nu);

struct GalleryEntry {
  std::string name;
  GeneratorSpec spec;
  std::string worst_f;  // "constant", "negation" or "any"
  // Documented ceiling on D(k) for the attached f (windows from x_1).
  std::uint64_t ceiling_plateau;  // D(k) <= min(k, ceiling_plateau)
  bool poor_quality;              // maximal diversity but trivially predictable
  std::string note;
};

// Names: index, counter_mode_f_of_i, f_of_i_plus_i, f_of_x_plus_i,
// kitchen_sink. Throws ConfigError for unknown names.
GalleryEntry gallery(std::string_view name, std::uint64_t n, state_t constant = 0);

std::vector<std::string> gallery_names();

}  // namespace cagen

#endif  // CAGEN_ADVERSARIAL_H_
