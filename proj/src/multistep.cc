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

#include "cagen/multistep.h"

#include <algorithm>
#include <bit>

#include "cagen/errors.h"
#include "cagen/rng.h"

namespace cagen {

ShiftHashKey::ShiftHashKey(unsigned w, const std::vector<bool>& bits)
    : w_(w), bits_(0) {
  if (w == 0 || w > 63) throw DomainError("shift hash width must be 1..63");
  if (bits.size() != 2 * w - 1) {
    throw DomainError("shift hash on " + std::to_string(w) + "-bit inputs needs " +
                      std::to_string(2 * w - 1) + " key bits, got " +
                      std::to_string(bits.size()));
  }
  for (unsigned j = 0; j < bits.size(); ++j) {
    if (bits[j]) bits_ |= static_cast<unsigned __int128>(1) << j;
  }
}

ShiftHashKey ShiftHashKey::from_packed(unsigned w, unsigned __int128 packed) {
  if (w == 0 || w > 63) throw DomainError("shift hash width must be 1..63");
  const unsigned len = 2 * w - 1;
  if ((packed >> len) != 0) {
    throw DomainError("shift hash key has bits above position " +
                      std::to_string(len - 1));
  }
  return ShiftHashKey(w, packed);
}

state_t shift_hash(const ShiftHashKey& key, state_t x) {
  const unsigned w = key.width();
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  if ((x & ~mask) != 0) {
    throw DomainError("shift hash input " + std::to_string(x) + " exceeds " +
                      std::to_string(w) + " bits");
  }
  state_t out = 0;
  for (unsigned i = 0; i < w; ++i) {
    const auto window = static_cast<std::uint64_t>(key.packed() >> i) & mask;
    out |= static_cast<state_t>(std::popcount(window & x) & 1) << i;
  }
  return out;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_round_function(const OutputFunction& g, const StateSpace& space) {
  if (g.space().size() != space.size() || g.output_size() != space.size()) {
    throw DomainError("Feistel round functions must map X to X (n = " +
                      std::to_string(space.size()) + ")");
  }
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > (static_cast<unsigned __int128>(1) << 62)) {
      throw GuardExceeded("n^t is too large for an explicit tuple table");
    }
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

void validate(const TStepSpec& spec) {
  const StateSpace& space = spec.f.space();
  if (spec.t < 2) throw DomainError("t-step mode needs t >= 2");
  spec.op.check_compatible(space);
  space.check(spec.counter_start, "counter start");
  std::visit(
      Overloaded{
          [](const BlockwiseIdentity&) {},
          [&](const Feistel3& o) {
            if (spec.t != 2) throw InvalidOperation("Feistel outputs need t = 2");
            o.op.check_compatible(space);
            require_round_function(o.g1, space);
            require_round_function(o.g2, space);
            require_round_function(o.g3, space);
          },
          [&](const Lucks& o) {
            if (spec.t != 2) throw InvalidOperation("Feistel outputs need t = 2");
            o.op.check_compatible(space);
            require_round_function(o.g, space);
            if (!space.power_of_two() || o.h.width() != space.width()) {
              throw DomainError("shift hash width must equal log2(n)");
            }
          },
          [&](const CustomTupleTable& o) {
            const std::uint64_t rows = checked_pow(space.size(), spec.t);
            if (o.entries.size() != rows * spec.t) {
              throw DomainError("custom tuple table needs n^t * t entries");
            }
            for (state_t v : o.entries) {
              if (v >= o.output_size) {
                throw DomainError("custom tuple table entry exceeds output size");
              }
            }
          },
      },
      spec.output);
}

Tuple t_step(const TStepSpec& spec, std::span<const state_t> tuple,
             std::uint64_t index) {
  const StateSpace& space = spec.f.space();
  if (tuple.size() != spec.t) {
    throw DomainError("tuple has " + std::to_string(tuple.size()) +
                      " coordinates, expected t = " + std::to_string(spec.t));
  }
  for (state_t v : tuple) space.check(v, "tuple coordinate");
  Tuple out(spec.t);
  state_t y = tuple.back();
  if (spec.dense) {
    // Flat positions index*t .. index*t + t - 1, counter combined each clock.
    const state_t base = space.add(
        spec.counter_start,
        space.reduce(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(index) * spec.t) % space.size())));
    for (unsigned m = 0; m < spec.t; ++m) {
      y = spec.op.apply_unchecked(space, spec.f(y), space.add(base, space.reduce(m)));
      out[m] = y;
    }
  } else {
    for (unsigned m = 0; m < spec.t; ++m) {
      y = spec.f(y);
      out[m] = y;
    }
    out.back() = spec.op.apply_unchecked(
        space, out.back(), space.add(spec.counter_start, space.reduce(index)));
  }
  return out;
}

Tuple initial_tuple(const TStepSpec& spec, state_t seed) {
  const StateSpace& space = spec.f.space();
  space.check(seed, "seed");
  Tuple out(spec.t);
  out[0] = seed;
  if (spec.dense) {
    for (unsigned m = 1; m < spec.t; ++m) {
      out[m] = spec.op.apply_unchecked(space, spec.f(out[m - 1]),
                                       space.add(spec.counter_start, space.reduce(m)));
    }
  } else {
    for (unsigned m = 1; m < spec.t; ++m) out[m] = spec.f(out[m - 1]);
    out.back() = spec.op.apply_unchecked(space, out.back(), spec.counter_start);
  }
  return out;
}

std::vector<Tuple> run_tuples(const TStepSpec& spec, state_t seed,
                              std::uint64_t length) {
  validate(spec);
  if (length == 0) throw DomainError("run length must be positive");
  std::vector<Tuple> out;
  out.reserve(length);
  out.push_back(initial_tuple(spec, seed));
  for (std::uint64_t i = 1; i < length; ++i) {
    out.push_back(t_step(spec, out.back(), i));
  }
  return out;
}

std::vector<state_t> run_flat(const TStepSpec& spec, state_t seed,
                              std::uint64_t tuples) {
  std::vector<state_t> flat;
  flat.reserve(tuples * spec.t);
  for (const Tuple& tu : run_tuples(spec, seed, tuples)) {
    flat.insert(flat.end(), tu.begin(), tu.end());
  }
  return flat;
}

std::pair<state_t, state_t> feistel_round(const OutputFunction& g, state_t left,
                                          state_t right, const LatinOp& op) {
  const StateSpace& space = g.space();
  require_round_function(g, space);
  return {right, apply(op, space, left, g(right))};
}

std::pair<state_t, state_t> feistel_round_inverse(const OutputFunction& g,
                                                  state_t left, state_t right,
                                                  const LatinOp& op) {
  const StateSpace& space = g.space();
  require_round_function(g, space);
  space.check(left, "left half");
  // (left, right) = (R, L * g(R)).
  return {invert_left(op, space, g(left), right), left};
}

std::pair<state_t, state_t> three_round_output(const TupleOutput& variant,
                                               std::pair<state_t, state_t> p) {
  return std::visit(
      Overloaded{
          [&](const Feistel3& o) {
            p = feistel_round(o.g3, p.first, p.second, o.op);
            p = feistel_round(o.g2, p.first, p.second, o.op);
            return feistel_round(o.g1, p.first, p.second, o.op);
          },
          [&](const Lucks& o) {
            const StateSpace& space = o.g.space();
            space.check(p.first, "left half");
            space.check(p.second, "right half");
            p = {p.second,
                 apply(o.op, space, p.first, shift_hash(o.h, p.second))};
            p = feistel_round(o.g, p.first, p.second, o.op);
            return feistel_round(o.g, p.first, p.second, o.op);
          },
          [](const auto&) -> std::pair<state_t, state_t> {
            throw InvalidOperation(
                "three_round_output needs a Feistel3 or Lucks output");
          },
      },
      variant);
}

Tuple apply_output(const TStepSpec& spec, std::span<const state_t> tuple) {
  return std::visit(
      Overloaded{
          [&](const BlockwiseIdentity&) { return Tuple(tuple.begin(), tuple.end()); },
          [&](const CustomTupleTable& o) {
            const std::uint64_t n = spec.f.size();
            std::uint64_t idx = 0;
            for (std::size_t j = tuple.size(); j-- > 0;) idx = idx * n + tuple[j];
            const auto first = o.entries.begin() + static_cast<std::ptrdiff_t>(idx * spec.t);
            return Tuple(first, first + spec.t);
          },
          [&](const auto&) {
            const auto [l, r] = three_round_output(spec.output, {tuple[0], tuple[1]});
            return Tuple{l, r};
          },
      },
      spec.output);
}

std::vector<Tuple> run_tuple_outputs(const TStepSpec& spec, state_t seed,
                                     std::uint64_t length) {
  auto tuples = run_tuples(spec, seed, length);
  for (auto& tu : tuples) tu = apply_output(spec, tu);
  return tuples;
}

std::vector<Tuple> run_multistep_cascade(const MultiStepCascade& cascade,
                                         std::span<const state_t> seeds,
                                         std::uint64_t length) {
  const auto& levels = cascade.levels;
  if (levels.empty()) throw DomainError("cascade needs at least one level");
  if (seeds.size() != levels.size()) {
    throw DomainError("cascade needs one seed per level");
  }
  const StateSpace& space = levels[0].f.space();
  for (std::size_t j = 0; j < levels.size(); ++j) {
    validate(levels[j]);
    if (levels[j].f.size() != space.size()) {
      throw DomainError("cascade levels must share one state space");
    }
    if (j > 0 && levels[j].t <= levels[j - 1].t) {
      throw DomainError("cascade block sizes must strictly increase");
    }
  }
  if (length == 0) throw DomainError("run length must be positive");

  // Current tuple of every level; level j's output tuple assists level j+1.
  std::vector<Tuple> cur(levels.size());
  auto combine = [&](std::size_t j, Tuple& tu, const Tuple& assist) {
    const std::size_t off = tu.size() - assist.size();
    for (std::size_t m = 0; m < assist.size(); ++m) {
      tu[off + m] = levels[j].op.apply_unchecked(space, tu[off + m], assist[m]);
    }
  };
  auto advance = [&](std::uint64_t index) {
    for (std::size_t j = 0; j < levels.size(); ++j) {
      if (j == 0) {
        cur[0] = index == 0 ? initial_tuple(levels[0], seeds[0])
                            : t_step(levels[0], cur[0], index);
        continue;
      }
      // Outer levels are sequence-assisted: f-hat without the counter, then
      // the inner output tuple combined into the last coordinates.
      Tuple tu(levels[j].t);
      state_t y = index == 0 ? seeds[j] : cur[j].back();
      if (index == 0) {
        tu[0] = y;
        for (unsigned m = 1; m < levels[j].t; ++m) tu[m] = levels[j].f(tu[m - 1]);
      } else {
        for (unsigned m = 0; m < levels[j].t; ++m) {
          y = levels[j].f(y);
          tu[m] = y;
        }
      }
      combine(j, tu, apply_output(levels[j - 1], cur[j - 1]));
      cur[j] = std::move(tu);
    }
  };

  std::vector<Tuple> out;
  out.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    advance(i);
    out.push_back(cur.back());
  }
  return out;
}

TwoRoundExperiment two_round_feistel_experiment(std::uint64_t n,
                                                std::uint64_t outputs,
                                                std::uint64_t trials,
                                                std::uint64_t rng_seed) {
  if (!is_power_of_two(n) || n < 2) throw DomainError("n must be a power of two");
  if (outputs == 0 || trials == 0) throw DomainError("outputs and trials must be positive");
  const StateSpace space(n);
  std::vector<std::uint64_t> seen(n, 0);
  std::uint64_t stamp = 0;
  auto left_collisions = [&](const std::vector<state_t>& lefts) {
    ++stamp;
    std::uint64_t c = 0;
    for (state_t v : lefts) {
      if (seen[v] == stamp) ++c;
      seen[v] = stamp;
    }
    return c;
  };

  std::vector<std::uint64_t> gen_counts(trials), rand_counts(trials);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng(rng_seed, 2 * trial);
    const auto f = FunctionTable::table(space, rng.table(n));
    const auto g = OutputFunction::table(space, rng.table(n), n);
    TStepSpec spec{f, 2, LatinOp::add_mod(), BlockwiseIdentity{}, false, 0};
    const state_t seed = rng.below(n);
    std::vector<state_t> lefts;
    lefts.reserve(outputs);
    for (const Tuple& tu : run_tuples(spec, seed, outputs)) {
      auto p = feistel_round(g, tu[0], tu[1]);
      p = feistel_round(g, p.first, p.second);
      lefts.push_back(p.first);
    }
    gen_counts[trial] = left_collisions(lefts);

    Rng ideal(rng_seed, 2 * trial + 1);
    for (auto& v : lefts) v = ideal.below(n);
    rand_counts[trial] = left_collisions(lefts);
  }

  std::vector<std::uint64_t> sorted = rand_counts;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(trials / 2),
                   sorted.end());
  const std::uint64_t threshold = sorted[trials / 2];

  TwoRoundExperiment r;
  r.n = n;
  r.outputs = outputs;
  r.trials = trials;
  double gen_hits = 0, rand_hits = 0, gen_sum = 0, rand_sum = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    gen_sum += static_cast<double>(gen_counts[i]);
    rand_sum += static_cast<double>(rand_counts[i]);
    gen_hits += gen_counts[i] > threshold ? 1 : 0;
    rand_hits += rand_counts[i] > threshold ? 1 : 0;
  }
  const auto t = static_cast<double>(trials);
  r.mean_left_collisions_generator = gen_sum / t;
  r.mean_left_collisions_random = rand_sum / t;
  r.advantage = std::abs(gen_hits / t - rand_hits / t);
  return r;
}

}  // namespace cagen
