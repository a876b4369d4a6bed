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
// t-step counter-assisted mode.
//
// States are t-tuples. The plain mode maps a tuple with last coordinate y to
//
//   (f(y), f^2(y), ..., f^t(y) * c)
//
// where c = (counter_start + i) mod n is combined into the last coordinate
// only, once per tuple. The dense mode instead clocks the ordinary
// counter-assisted generator t times per tuple, combining the counter at
// every clock.
//
// A generator is seeded with one state s. The initial tuple is
// (s, f(s), ..., f^{t-2}(s), f^{t-1}(s) * counter_start) in plain mode, and
// the first t states of the counter-assisted generator in dense mode, so
// that every tuple, including the first, has a counter-combined last
// coordinate.
//
// Output functions on pairs: three-round Feistel compositions, either with
// three keyed round functions or with a GF(2)-linear shift hash in the first
// round followed by the same round function twice.

#ifndef CAGEN_MULTISTEP_H_
#define CAGEN_MULTISTEP_H_

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "cagen/function_table.h"
#include "cagen/statespace.h"

namespace cagen {

using Tuple = std::vector<state_t>;

// Key of a shift-family hash on w-bit inputs: 2w - 1 key bits. Output bit i
// is the GF(2) inner product of the input with key bits i .. i + w - 1.
class ShiftHashKey {
 public:
  // Throws DomainError unless bits.size() == 2w - 1 and 1 <= w <= 63.
  ShiftHashKey(unsigned w, const std::vector<bool>& bits);
  // Bit j of `packed` is key bit j; bits above 2w - 2 must be zero.
  static ShiftHashKey from_packed(unsigned w, unsigned __int128 packed);

  unsigned width() const { return w_; }
  bool bit(unsigned j) const { return ((bits_ >> j) & 1) != 0; }
  unsigned __int128 packed() const { return bits_; }

 private:
  ShiftHashKey(unsigned w, unsigned __int128 bits) : w_(w), bits_(bits) {}
  unsigned w_;
  unsigned __int128 bits_;
};

// Throws DomainError when x has bits at or above w.
state_t shift_hash(const ShiftHashKey& key, state_t x);

struct BlockwiseIdentity {};

// D_{g1} o D_{g2} o D_{g3}: the input passes through D_{g3} first.
struct Feistel3 {
  OutputFunction g1, g2, g3;
  LatinOp op = LatinOp::xor_op();
};

// D_g o D_g o D_h with h a shift hash: the input passes through D_h first.
struct Lucks {
  OutputFunction g;
  ShiftHashKey h;
  LatinOp op = LatinOp::xor_op();
};

// Explicit map X^t -> Y^t. Tuple (x_0, ..., x_{t-1}) has table index
// sum x_j n^j; its image occupies entries [index * t, index * t + t).
struct CustomTupleTable {
  std::vector<state_t> entries;
  std::uint64_t output_size;
};

using TupleOutput =
    std::variant<BlockwiseIdentity, Feistel3, Lucks, CustomTupleTable>;

struct TStepSpec {
  FunctionTable f;
  unsigned t = 2;
  LatinOp op = LatinOp::add_mod();
  TupleOutput output = BlockwiseIdentity{};
  bool dense = false;
  state_t counter_start = 0;
};

// Throws DomainError / InvalidOperation for t < 2, an incompatible op, or a
// pair-only output on t != 2.
void validate(const TStepSpec& spec);

// Produces tuple i from tuple i - 1.
Tuple t_step(const TStepSpec& spec, std::span<const state_t> tuple,
             std::uint64_t index);

Tuple initial_tuple(const TStepSpec& spec, state_t seed);

// Tuples T_0 .. T_{length-1}.
std::vector<Tuple> run_tuples(const TStepSpec& spec, state_t seed,
                              std::uint64_t length);

// The same states concatenated: T_0[0], ..., T_0[t-1], T_1[0], ...
std::vector<state_t> run_flat(const TStepSpec& spec, state_t seed,
                              std::uint64_t tuples);

Tuple apply_output(const TStepSpec& spec, std::span<const state_t> tuple);

std::vector<Tuple> run_tuple_outputs(const TStepSpec& spec, state_t seed,
                                     std::uint64_t length);

// D_g(L, R) = (R, L * g(R)). Requires g: X -> X.
std::pair<state_t, state_t> feistel_round(const OutputFunction& g, state_t left,
                                          state_t right,
                                          const LatinOp& op = LatinOp::xor_op());

// Inverse of feistel_round: recovers (L, R) from (R, L * g(R)).
std::pair<state_t, state_t> feistel_round_inverse(
    const OutputFunction& g, state_t left, state_t right,
    const LatinOp& op = LatinOp::xor_op());

// Three-round composition for a Feistel3 or Lucks output; throws
// InvalidOperation for other variants.
std::pair<state_t, state_t> three_round_output(const TupleOutput& variant,
                                               std::pair<state_t, state_t> pair);

// Cascade of multi-step generators G_{m-1}^{t_{m-1}} ^* ... ^* G_0^{t_0}
// with strictly increasing t. Level j + 1 combines the output tuples of
// level j coordinate-wise (with its own op) into the last t_j coordinates of
// its freshly stepped tuple. levels[0] is the innermost generator.
struct MultiStepCascade {
  std::vector<TStepSpec> levels;
};

// One seed per level. Returns the outermost tuples T_0 .. T_{length-1}.
std::vector<Tuple> run_multistep_cascade(const MultiStepCascade& cascade,
                                         std::span<const state_t> seeds,
                                         std::uint64_t length);

// Harness for the open question on the two-round construction D_g o D_g
// over a 2-step generator with random f and g: estimates the advantage of a
// fixed statistical test (collisions of the left output half, thresholded
// at its median under the ideal model) in telling m outputs apart from
// uniform pairs. It measures one distinguisher; it does not answer what the
// optimal advantage is.
struct TwoRoundExperiment {
  std::uint64_t n = 0;
  std::uint64_t outputs = 0;
  std::uint64_t trials = 0;
  double mean_left_collisions_generator = 0;
  double mean_left_collisions_random = 0;
  double advantage = 0;  // |Pr[test=1 | generator] - Pr[test=1 | random]|
};

TwoRoundExperiment two_round_feistel_experiment(std::uint64_t n,
                                                std::uint64_t outputs,
                                                std::uint64_t trials,
                                                std::uint64_t rng_seed);

}  // namespace cagen

#endif  // CAGEN_MULTISTEP_H_
