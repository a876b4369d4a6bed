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

#include "cagen/generator.h"

#include <type_traits>

#include "cagen/errors.h"

namespace cagen {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_same_space(const StateSpace& expected, const StateSpace& got,
                        const char* what) {
  if (expected.size() != got.size()) {
    throw DomainError(std::string(what) + " acts on n = " +
                      std::to_string(got.size()) + ", expected n = " +
                      std::to_string(expected.size()));
  }
}

void check_nested(const StateSpace& space, const NestedAssist& nested) {
  if (!nested.generator) throw DomainError("nested assist generator is null");
  const GeneratorSpec& inner = *nested.generator;
  require_same_space(space, inner.space(), "nested generator");
  if (inner.output().output_size() != space.size()) {
    throw DomainError(
        "nested generator outputs must lie in the outer state space: output "
        "size " +
        std::to_string(inner.output().output_size()) + " != n = " +
        std::to_string(space.size()));
  }
  inner.space().check(nested.seed, "nested seed");
}

state_t counter_value(const StateSpace& space, state_t start,
                      std::uint64_t index) {
  return space.add(start, space.reduce(index));
}

}  // namespace

std::string_view bad_variant_name(BadVariant v) {
  switch (v) {
    case BadVariant::kIndex:
      return "index";
    case BadVariant::kCounterModeFOfI:
      return "counter_mode_f_of_i";
    case BadVariant::kFOfIPlusI:
      return "f_of_i_plus_i";
    case BadVariant::kFOfXPlusI:
      return "f_of_x_plus_i";
    case BadVariant::kKitchenSink:
      return "kitchen_sink";
  }
  return "?";
}

BadVariant bad_variant_from_name(std::string_view name) {
  for (BadVariant v : {BadVariant::kIndex, BadVariant::kCounterModeFOfI,
                       BadVariant::kFOfIPlusI, BadVariant::kFOfXPlusI,
                       BadVariant::kKitchenSink}) {
    if (bad_variant_name(v) == name) return v;
  }
  throw ConfigError("unknown bad-mode variant '" + std::string(name) + "'");
}

GeneratorSpec::GeneratorSpec(Node node)
    : node_(std::move(node)),
      space_(std::visit(
          Overloaded{[](const CounterMode& m) { return m.g.space(); },
                     [](const auto& m) { return m.f.space(); }},
          node_)) {
  std::visit(
      Overloaded{
          [&](const Iterative& m) {
            require_same_space(space_, m.g.space(), "output function");
          },
          [&](const CounterMode& m) {
            m.op.check_compatible(space_);
            space_.check(m.s, "counter-mode offset");
            counter_dependent_ = true;
          },
          [&](const CounterAssisted& m) {
            require_same_space(space_, m.g.space(), "output function");
            m.op.check_compatible(space_);
            space_.check(m.counter_start, "counter start");
            counter_dependent_ = true;
          },
          [&](const SequenceAssisted& m) {
            require_same_space(space_, m.g.space(), "output function");
            m.op.check_compatible(space_);
            if (const auto* seq = std::get_if<std::vector<state_t>>(&m.assist)) {
              for (state_t c : *seq) space_.check(c, "assist value");
              explicit_assist_ = true;
            } else {
              const auto& nested = std::get<NestedAssist>(m.assist);
              check_nested(space_, nested);
              depth_ = 1 + nested.generator->depth();
              counter_dependent_ = nested.generator->counter_dependent();
              explicit_assist_ = nested.generator->has_explicit_assist();
            }
          },
          [&](const Cascade& m) {
            require_same_space(space_, m.g.space(), "output function");
            m.op.check_compatible(space_);
            check_nested(space_, m.inner);
            depth_ = 1 + m.inner.generator->depth();
            counter_dependent_ = m.inner.generator->counter_dependent();
            explicit_assist_ = m.inner.generator->has_explicit_assist();
          },
          [&](const BadMode& m) {
            require_same_space(space_, m.g.space(), "output function");
            counter_dependent_ = true;
          },
      },
      node_);
  if (depth_ > kMaxGeneratorDepth) {
    throw DomainError("generators nest at most " +
                      std::to_string(kMaxGeneratorDepth) + " levels deep");
  }
}

GeneratorSpec GeneratorSpec::iterative(FunctionTable f, OutputFunction g) {
  return GeneratorSpec(Iterative{std::move(f), std::move(g)});
}

GeneratorSpec GeneratorSpec::iterative(FunctionTable f) {
  auto g = OutputFunction::identity(f.space());
  return iterative(std::move(f), std::move(g));
}

GeneratorSpec GeneratorSpec::counter_mode(OutputFunction g, LatinOp op,
                                          state_t s) {
  return GeneratorSpec(CounterMode{std::move(g), std::move(op), s});
}

GeneratorSpec GeneratorSpec::counter_assisted(FunctionTable f, OutputFunction g,
                                              LatinOp op,
                                              state_t counter_start) {
  return GeneratorSpec(
      CounterAssisted{std::move(f), std::move(g), std::move(op), counter_start});
}

GeneratorSpec GeneratorSpec::counter_assisted(FunctionTable f, LatinOp op) {
  auto g = OutputFunction::identity(f.space());
  return counter_assisted(std::move(f), std::move(g), std::move(op), 0);
}

GeneratorSpec GeneratorSpec::sequence_assisted(FunctionTable f,
                                               OutputFunction g, LatinOp op,
                                               std::vector<state_t> assist) {
  return GeneratorSpec(SequenceAssisted{std::move(f), std::move(g),
                                        std::move(op), std::move(assist)});
}

GeneratorSpec GeneratorSpec::sequence_assisted(FunctionTable f,
                                               OutputFunction g, LatinOp op,
                                               GeneratorSpec assist,
                                               state_t assist_seed) {
  return GeneratorSpec(SequenceAssisted{
      std::move(f), std::move(g), std::move(op),
      NestedAssist{std::make_shared<const GeneratorSpec>(std::move(assist)),
                   assist_seed}});
}

GeneratorSpec GeneratorSpec::cascade(FunctionTable f, OutputFunction g,
                                     LatinOp op, GeneratorSpec inner,
                                     state_t inner_seed) {
  return GeneratorSpec(Cascade{
      std::move(f), std::move(g), std::move(op),
      NestedAssist{std::make_shared<const GeneratorSpec>(std::move(inner)),
                   inner_seed}});
}

GeneratorSpec GeneratorSpec::bad_mode(BadVariant variant, FunctionTable f) {
  auto g = OutputFunction::identity(f.space());
  return GeneratorSpec(BadMode{variant, std::move(f), std::move(g)});
}

const OutputFunction& GeneratorSpec::output() const {
  return std::visit([](const auto& m) -> const OutputFunction& { return m.g; },
                    node_);
}

std::string GeneratorSpec::kind_name() const {
  return std::visit(
      Overloaded{
          [](const Iterative&) -> std::string { return "iterative"; },
          [](const CounterMode&) -> std::string { return "counter_mode"; },
          [](const CounterAssisted&) -> std::string {
            return "counter_assisted";
          },
          [](const SequenceAssisted&) -> std::string {
            return "sequence_assisted";
          },
          [](const Cascade&) -> std::string { return "cascade"; },
          [](const BadMode& m) -> std::string {
            return "bad_mode:" + std::string(bad_variant_name(m.variant));
          },
      },
      node_);
}

const GeneratorSpec* GeneratorSpec::nested() const {
  if (const auto* sa = std::get_if<SequenceAssisted>(&node_)) {
    if (const auto* n = std::get_if<NestedAssist>(&sa->assist)) {
      return n->generator.get();
    }
  }
  if (const auto* c = std::get_if<Cascade>(&node_)) {
    return c->inner.generator.get();
  }
  return nullptr;
}

state_t GeneratorSpec::nested_seed() const {
  if (const auto* sa = std::get_if<SequenceAssisted>(&node_)) {
    if (const auto* n = std::get_if<NestedAssist>(&sa->assist)) return n->seed;
  }
  if (const auto* c = std::get_if<Cascade>(&node_)) return c->inner.seed;
  return 0;
}

bool GeneratorSpec::level_counter_dependent() const {
  return std::holds_alternative<CounterMode>(node_) ||
         std::holds_alternative<CounterAssisted>(node_) ||
         std::holds_alternative<BadMode>(node_);
}

bool GeneratorSpec::is_counter_assisted() const {
  return std::holds_alternative<CounterAssisted>(node_) ||
         std::holds_alternative<CounterMode>(node_);
}

LevelState initial_state(const GeneratorSpec& spec, state_t seed) {
  spec.space().check(seed, "seed");
  LevelState st;
  st.depth = static_cast<std::uint8_t>(spec.depth());
  st.levels[0] = seed;
  const GeneratorSpec* level = &spec;
  for (std::size_t d = 1; d < spec.depth(); ++d) {
    st.levels[d] = level->nested_seed();
    level = level->nested();
  }
  return st;
}

namespace {

// Steps levels[d..] of `spec` (which sits at depth d) in place.
void step_in_place(const GeneratorSpec& spec, LevelState& st, std::size_t d,
                   std::uint64_t index) {
  const StateSpace& space = spec.space();
  state_t& x = st.levels[d];
  std::visit(
      Overloaded{
          [&](const Iterative& m) { x = m.f(x); },
          [&](const CounterMode& m) {
            x = m.op.apply_unchecked(space, m.s, space.reduce(index));
          },
          [&](const CounterAssisted& m) {
            x = m.op.apply_unchecked(space, m.f(x),
                                     counter_value(space, m.counter_start, index));
          },
          [&](const SequenceAssisted& m) {
            state_t c;
            if (const auto* seq = std::get_if<std::vector<state_t>>(&m.assist)) {
              if (index >= seq->size()) {
                throw ExhaustedAssist("assist sequence has " +
                                      std::to_string(seq->size()) +
                                      " entries; no c_" + std::to_string(index));
              }
              c = (*seq)[index];
            } else {
              const GeneratorSpec& inner =
                  *std::get<NestedAssist>(m.assist).generator;
              step_in_place(inner, st, d + 1, index);
              c = inner.output()(st.levels[d + 1]);
            }
            x = m.op.apply_unchecked(space, m.f(x), c);
          },
          [&](const Cascade& m) {
            const GeneratorSpec& inner = *m.inner.generator;
            step_in_place(inner, st, d + 1, index);
            x = m.op.apply_unchecked(space, m.f(x),
                                     inner.output()(st.levels[d + 1]));
          },
          [&](const BadMode& m) {
            const state_t i = space.reduce(index);
            switch (m.variant) {
              case BadVariant::kIndex:
                x = i;
                break;
              case BadVariant::kCounterModeFOfI:
                x = m.f(i);
                break;
              case BadVariant::kFOfIPlusI:
                x = space.add(m.f(i), i);
                break;
              case BadVariant::kFOfXPlusI:
                x = m.f(space.add(x, i));
                break;
              case BadVariant::kKitchenSink:
                x = space.add(m.f(space.add(x, i)), i);
                break;
            }
          },
      },
      spec.node());
}

}  // namespace

LevelState step(const GeneratorSpec& spec, const LevelState& state,
                std::uint64_t index) {
  if (state.depth != spec.depth()) {
    throw DomainError("level state depth " + std::to_string(state.depth) +
                      " does not match generator depth " +
                      std::to_string(spec.depth()));
  }
  LevelState next = state;
  step_in_place(spec, next, 0, index);
  return next;
}

state_t step(const GeneratorSpec& spec, state_t state, std::uint64_t index) {
  if (spec.depth() != 1) {
    throw InvalidOperation(
        "nested generators must be stepped with a LevelState");
  }
  spec.space().check(state);
  LevelState st;
  st.levels[0] = state;
  step_in_place(spec, st, 0, index);
  return st.levels[0];
}

state_t output_of(const GeneratorSpec& spec, const LevelState& state) {
  return spec.output()(state.outer());
}

namespace {

void check_length(std::uint64_t length, std::uint64_t guard) {
  if (length == 0) throw DomainError("run length must be positive");
  if (length > guard) {
    throw GuardExceeded("run length " + std::to_string(length) +
                        " exceeds the memory guard " + std::to_string(guard));
  }
}

}  // namespace

std::vector<state_t> run_states(const GeneratorSpec& spec, state_t seed,
                                std::uint64_t length, std::uint64_t guard) {
  check_length(length, guard);
  std::vector<state_t> out;
  out.reserve(length);
  LevelState st = initial_state(spec, seed);
  out.push_back(st.outer());
  for (std::uint64_t i = 1; i < length; ++i) {
    step_in_place(spec, st, 0, i);
    out.push_back(st.outer());
  }
  return out;
}

std::vector<state_t> run_outputs(const GeneratorSpec& spec, state_t seed,
                                 std::uint64_t length, std::uint64_t guard) {
  auto states = run_states(spec, seed, length, guard);
  const OutputFunction& g = spec.output();
  for (auto& x : states) x = g(x);
  return states;
}

GeneratorSpec as_counter_assisted(const GeneratorSpec& counter_mode) {
  const auto* cm = std::get_if<CounterMode>(&counter_mode.node());
  if (cm == nullptr) {
    throw InvalidOperation("as_counter_assisted expects a counter-mode spec, got " +
                           counter_mode.kind_name());
  }
  return GeneratorSpec::counter_assisted(
      FunctionTable::constant(counter_mode.space(), cm->s), cm->g, cm->op, 0);
}

bool conjugated_equivalence_check(const PermutationTable& u,
                                  const PermutationTable& f,
                                  const OutputFunction& g, state_t seed,
                                  std::uint64_t length) {
  const StateSpace& space = g.space();
  const std::uint64_t n = space.size();
  if (u.size() != n || f.size() != n) {
    throw DomainError("u and f must both be tables over n = " +
                      std::to_string(n));
  }
  if (!u.is_bijection()) throw DomainError("u is not a permutation");
  if (!f.is_bijection()) throw DomainError("f is not a permutation");
  space.check(seed, "seed");

  std::vector<state_t> conj(n), g_of_f(n);
  for (state_t x = 0; x < n; ++x) {
    conj[x] = f(u(f.inverse(x)));
    g_of_f[x] = g(f(x));
  }
  const auto lhs = GeneratorSpec::iterative(
      FunctionTable::table(space, std::move(conj)), g);
  const auto rhs = GeneratorSpec::iterative(
      FunctionTable::table(space, std::vector<state_t>(u.values().begin(),
                                                   u.values().end())),
      OutputFunction::table(space, std::move(g_of_f), g.output_size()));
  return run_outputs(lhs, seed, length) ==
         run_outputs(rhs, f.inverse(seed), length);
}

GeneratorSpec with_derived_seeds(const GeneratorSpec& spec, state_t master) {
  const StateSpace& space = spec.space();
  space.check(master, "master seed");
  const auto splitter = GeneratorSpec::counter_assisted(
      FunctionTable::keyed_mixer(space, KeyedMixer("cagen/seed-split", 4)));
  const auto seeds = run_states(splitter, master, spec.depth());

  // Rebuild from the innermost level outwards.
  std::vector<const GeneratorSpec*> chain;
  for (const GeneratorSpec* s = &spec; s != nullptr; s = s->nested()) {
    chain.push_back(s);
  }
  GeneratorSpec rebuilt = *chain.back();
  for (std::size_t d = chain.size() - 1; d-- > 0;) {
    const state_t inner_seed = seeds[d + 1];
    auto inner = std::make_shared<const GeneratorSpec>(std::move(rebuilt));
    rebuilt = std::visit(
        Overloaded{
            [&](const SequenceAssisted& m) {
              return GeneratorSpec(SequenceAssisted{
                  m.f, m.g, m.op, NestedAssist{inner, inner_seed}});
            },
            [&](const Cascade& m) {
              return GeneratorSpec(
                  Cascade{m.f, m.g, m.op, NestedAssist{inner, inner_seed}});
            },
            [&](const auto&) -> GeneratorSpec {
              throw InvalidOperation("unexpected leaf in nesting chain");
            },
        },
        chain[d]->node());
  }
  return rebuilt;
}

}  // namespace cagen
