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
// The oracle chain behind the pseudorandomness argument for
// counter-assisted generators, and the birthday distinguisher.
//
//   O1  k independent uniform states
//   O2  random seed, f defined lazily; the birthday flag records a repeated
//       query; x_i = f(x_{i-1}) * i
//   O3  uniformly random f table, random seed, x_i = f(x_{i-1}) * i
//   O4  as O3 with a KeyedMixer f under a random key
//
// Transcripts hold x_1, ..., x_k. Trial t of an experiment draws from
// Rng(rng_seed, 4t + oracle) (see rng.h), so results replay bit for bit.
// O4 uses a keyed mixer as a stand-in; no pseudorandom-function claim is
// made for it.

#ifndef CAGEN_ORACLES_H_
#define CAGEN_ORACLES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cagen/function_table.h"
#include "cagen/statespace.h"

namespace cagen {

enum class OracleKind { kO1Random = 0, kO2LazyF = 1, kO3RandomTable = 2, kO4KeyedMixer = 3 };

inline constexpr std::array<OracleKind, 4> kAllOracles{
    OracleKind::kO1Random, OracleKind::kO2LazyF, OracleKind::kO3RandomTable,
    OracleKind::kO4KeyedMixer};

std::string_view oracle_name(OracleKind k);  // O1_random, O2_lazy_f, ...
OracleKind oracle_from_name(std::string_view name);  // throws ConfigError

struct OracleTranscript {
  OracleKind which = OracleKind::kO1Random;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::vector<state_t> states;  // x_1 .. x_k
  bool birthday_flag = false;   // O2 only
  std::uint64_t rng_seed = 0;
};

inline constexpr std::uint64_t kOracleTableGuard = std::uint64_t{1} << 26;

// Throws DomainError for k == 0 or n < 2, GuardExceeded when O3 would need a
// table above kOracleTableGuard entries.
OracleTranscript sample(OracleKind which, std::uint64_t n, std::uint64_t k,
                        std::uint64_t rng_seed,
                        const LatinOp& op = LatinOp::add_mod());

// Counter-assisted run x_1..x_k of f from seed x_0 (counter i at x_i).
std::vector<state_t> counter_assisted_transcript(const FunctionTable& f,
                                                 state_t seed, std::uint64_t k,
                                                 const LatinOp& op = LatinOp::add_mod());

enum class Verdict { kConsistent, kRandomLike, kInconclusive };

std::string_view verdict_name(Verdict v);  // consistent_with_counter_assisted, ...

struct DistinguisherResult {
  Verdict verdict = Verdict::kInconclusive;
  std::uint64_t collisions = 0;  // evaluable equal pairs checked
  std::uint64_t violations = 0;
};

// Collisions x_i == x_j (i < j) where both positions have a successor in the
// transcript. For a counter-assisted source f(x_i) = f(x_j), so the values
// recovered from the successors, invert_left(op, counter(i+1), x_{i+1}),
// agree. states[0] carries index `first_index`. Throws DomainError when
// states has fewer than 2 entries.
DistinguisherResult birthday_distinguisher(std::span<const state_t> states,
                                           std::uint64_t n, const LatinOp& op,
                                           std::uint64_t first_index = 1);

struct OracleStats {
  OracleKind which;
  std::uint64_t trials = 0;
  std::uint64_t birthday_flags = 0;       // O2 flag count
  std::uint64_t with_collision = 0;       // transcripts with an evaluable collision
  std::uint64_t consistent = 0;
  std::uint64_t random_like = 0;
  std::uint64_t inconclusive = 0;
  double birthday_rate() const;
  double collision_rate() const;
  // consistent / with_collision (0 when no collisions occurred).
  double consistent_given_collision() const;
};

struct ExperimentReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t trials = 0;
  std::uint64_t rng_seed = 0;
  double estimate_k2_over_2n = 0;
  double exact_birthday = 0;  // 1 - prod_{i=1}^{k-1} (1 - i/n)
  std::array<OracleStats, 4> oracles{};
};

// Probability that k uniform draws from n values contain a repeat.
double exact_birthday_probability(std::uint64_t n, std::uint64_t k);

ExperimentReport distinguishing_experiment(std::uint64_t n, std::uint64_t k,
                                           std::uint64_t trials,
                                           std::uint64_t rng_seed);

}  // namespace cagen

#endif  // CAGEN_ORACLES_H_
