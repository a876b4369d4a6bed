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
// Generator construction and stepping.
//
// A GeneratorSpec is an immutable tree. Leaves are iterative, counter-mode,
// counter-assisted and the deliberately weak "bad mode" generators; inner
// nodes are sequence-assisted generators and cascades, which combine
// f(x_{i-1}) with the i-th output of a nested generator through a Latin op.
//
// Indexing: x_0 is the seed and is never stepped. The step producing x_i
// receives index i; counter-assisted generators combine with the counter
// value (counter_start + i) mod n, so with counter_start = 0 the familiar
// recurrence x_i = f(x_{i-1}) + i (mod n) is reproduced exactly.
//
// Nested generators each carry their own seed. All levels advance in
// lockstep: producing outer x_i first produces the nested generator's x_i
// and feeds its output c_i into the combiner.

#ifndef CAGEN_GENERATOR_H_
#define CAGEN_GENERATOR_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cagen/function_table.h"
#include "cagen/statespace.h"

namespace cagen {

class GeneratorSpec;

struct NestedAssist {
  std::shared_ptr<const GeneratorSpec> generator;
  state_t seed = 0;
};

struct Iterative {
  FunctionTable f;
  OutputFunction g;
};

// x_i = s * i, independent of the previous state.
struct CounterMode {
  OutputFunction g;
  LatinOp op;
  state_t s = 0;
};

// x_i = f(x_{i-1}) * ((counter_start + i) mod n).
struct CounterAssisted {
  FunctionTable f;
  OutputFunction g;
  LatinOp op;
  state_t counter_start = 0;
};

// x_i = f(x_{i-1}) * c_i, where c is either an explicit finite sequence
// (c_0, c_1, ...; c_0 is never used) or the output stream of a nested
// generator.
struct SequenceAssisted {
  FunctionTable f;
  OutputFunction g;
  LatinOp op;
  std::variant<std::vector<state_t>, NestedAssist> assist;
};

// An iterative generator <f, g> assisted by the outputs of another
// counter-assisted (or cascade) generator.
struct Cascade {
  FunctionTable f;
  OutputFunction g;
  LatinOp op;
  NestedAssist inner;
};

// Naive counter-dependent modifications that fail for some f.
enum class BadVariant {
  kIndex,            // x_i = i
  kCounterModeFOfI,  // x_i = f(i)
  kFOfIPlusI,        // x_i = f(i) + i
  kFOfXPlusI,        // x_i = f(x_{i-1} + i)
  kKitchenSink,      // x_i = f(x_{i-1} + i) + i
};

std::string_view bad_variant_name(BadVariant v);
BadVariant bad_variant_from_name(std::string_view name);  // throws ConfigError

struct BadMode {
  BadVariant variant;
  FunctionTable f;
  OutputFunction g;
};

inline constexpr std::size_t kMaxGeneratorDepth = 8;

class GeneratorSpec {
 public:
  using Node = std::variant<Iterative, CounterMode, CounterAssisted,
                            SequenceAssisted, Cascade, BadMode>;

  // Validates component spaces, op compatibility and nesting depth.
  // Throws DomainError / InvalidOperation.
  explicit GeneratorSpec(Node node);

  static GeneratorSpec iterative(FunctionTable f, OutputFunction g);
  static GeneratorSpec iterative(FunctionTable f);
  static GeneratorSpec counter_mode(OutputFunction g, LatinOp op, state_t s);
  static GeneratorSpec counter_assisted(FunctionTable f, OutputFunction g,
                                        LatinOp op, state_t counter_start = 0);
  static GeneratorSpec counter_assisted(FunctionTable f,
                                        LatinOp op = LatinOp::add_mod());
  static GeneratorSpec sequence_assisted(FunctionTable f, OutputFunction g,
                                         LatinOp op,
                                         std::vector<state_t> assist);
  static GeneratorSpec sequence_assisted(FunctionTable f, OutputFunction g,
                                         LatinOp op, GeneratorSpec assist,
                                         state_t assist_seed);
  static GeneratorSpec cascade(FunctionTable f, OutputFunction g, LatinOp op,
                               GeneratorSpec inner, state_t inner_seed);
  static GeneratorSpec bad_mode(BadVariant variant, FunctionTable f);

  const Node& node() const { return node_; }
  const StateSpace& space() const { return space_; }
  const OutputFunction& output() const;
  std::string kind_name() const;

  // Number of stacked levels (1 for leaves).
  std::size_t depth() const { return depth_; }
  // The nested generator feeding this level, if any.
  const GeneratorSpec* nested() const;
  state_t nested_seed() const;
  // This level's step reads the index.
  bool level_counter_dependent() const;
  // Some level's step reads the index.
  bool counter_dependent() const { return counter_dependent_; }
  // Some level consumes an explicit finite assist sequence.
  bool has_explicit_assist() const { return explicit_assist_; }
  // Leaf or nested counter-assisted structure with a Latin combiner, i.e.
  // the isolated-equality property applies to its state sequence.
  bool is_counter_assisted() const;

 private:
  Node node_;
  StateSpace space_;
  std::size_t depth_ = 1;
  bool counter_dependent_ = false;
  bool explicit_assist_ = false;
};

// Per-level states of a (possibly nested) generator; levels[0] is the
// outermost state.
struct LevelState {
  std::array<state_t, kMaxGeneratorDepth> levels{};
  std::uint8_t depth = 1;

  state_t outer() const { return levels[0]; }
  friend bool operator==(const LevelState& a, const LevelState& b) {
    if (a.depth != b.depth) return false;
    for (std::size_t i = 0; i < a.depth; ++i) {
      if (a.levels[i] != b.levels[i]) return false;
    }
    return true;
  }
};

// Level state at index 0: the given seed for the outer level and each
// nested generator's configured seed below it.
LevelState initial_state(const GeneratorSpec& spec, state_t seed);

// Produces the state at position `index` from the state at index - 1.
// Throws ExhaustedAssist when an explicit assist has no entry at `index`.
LevelState step(const GeneratorSpec& spec, const LevelState& state,
                std::uint64_t index);

// Single-level convenience form. Throws InvalidOperation for nested specs,
// whose step needs the nested generator's state.
state_t step(const GeneratorSpec& spec, state_t state, std::uint64_t index);

// Output of the level state (g of the outer state).
state_t output_of(const GeneratorSpec& spec, const LevelState& state);

inline constexpr std::uint64_t kDefaultRunGuard = std::uint64_t{1} << 28;

// (x_0 = seed, x_1, ..., x_{length-1}). Throws GuardExceeded when
// length > guard, DomainError for an out-of-range seed.
std::vector<state_t> run_states(const GeneratorSpec& spec, state_t seed,
                                std::uint64_t length,
                                std::uint64_t guard = kDefaultRunGuard);

// (g(x_0), ..., g(x_{length-1})).
std::vector<state_t> run_outputs(const GeneratorSpec& spec, state_t seed,
                                 std::uint64_t length,
                                 std::uint64_t guard = kDefaultRunGuard);

// The counter-assisted generator with f == s equivalent to a counter-mode
// generator. Throws InvalidOperation if `counter_mode` is not CounterMode.
GeneratorSpec as_counter_assisted(const GeneratorSpec& counter_mode);

// Compares outputs of <f u f^-1, g> from `seed` with outputs of <u, g o f>
// from f^-1(seed) over `length` positions. Throws DomainError if u or f is
// not a permutation of the output function's state space.
bool conjugated_equivalence_check(const PermutationTable& u,
                                  const PermutationTable& f,
                                  const OutputFunction& g, state_t seed,
                                  std::uint64_t length);

// Re-seeds every nested generator from one master seed: the nested seeds at
// depth 1, 2, ... are x_1, x_2, ... of a counter-assisted generator over the
// same space whose f is KeyedMixer("cagen/seed-split", 4), started at
// `master`. The outer seed stays `master`.
GeneratorSpec with_derived_seeds(const GeneratorSpec& spec, state_t master);

}  // namespace cagen

#endif  // CAGEN_GENERATOR_H_
