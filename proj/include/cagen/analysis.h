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
// Diversity curves, cycle structure, the isolated-equality scan and the
// lower-bound calculator.
//
// Generator diversity is computed exactly on the functional graph of the
// generator's full state: the per-level states plus, for counter-dependent
// generators, the index mod n. Every seed contributes its start node; the
// graph is closed under the successor map, so each seed's run is covered up
// to and beyond the first recurrence of its full state. D(k) is the minimum,
// over every window start, of the number of distinct observed values among
// k consecutive positions.
//
// Window starts are the generated positions x_1, x_2, ... by default. The
// seed x_0 is an input rather than an output of the combiner, and for
// counter-dependent generators a window that starts at x_0 can fall one
// below the bounds that hold for generated positions (f == 0, seed 1 gives
// x = (1, 1, 2, ...)). Set include_seed_position to count x_0 as well.

#ifndef CAGEN_ANALYSIS_H_
#define CAGEN_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cagen/function_table.h"
#include "cagen/generator.h"
#include "cagen/multistep.h"
#include "cagen/statespace.h"

namespace cagen {

struct DiversityCurve {
  std::uint64_t kmax = 0;
  // values[k - 1] = D(k) for k = 1..kmax.
  std::vector<std::uint64_t> values;
  std::string subject;
  // Limit of D(k) as k grows, when known.
  std::optional<std::uint64_t> total;
  // Seeds were sampled: every value is an upper bound on the true D(k).
  bool upper_bound = false;
  // When set, values are min(D(k), cap) and total is min(total, cap).
  std::optional<std::uint64_t> cap;

  std::uint64_t at(std::uint64_t k) const { return values.at(k - 1); }
  // First violated link of 1 <= D(1), D(k) <= D(k+1) <= D(k) + 1, D(k) <= n
  // as a message, or nullopt.
  std::optional<std::string> check_chain(std::uint64_t n) const;
};

// Throws DomainError when kmax == 0 or kmax > seq.size().
DiversityCurve sequence_diversity(std::span<const state_t> seq,
                                  std::uint64_t kmax);

inline constexpr std::uint64_t kDefaultBruteForceGuard = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kDefaultNodeGuard = std::uint64_t{1} << 26;

enum class Observe { kStates, kOutputs };

struct DiversityOptions {
  // Largest n for an exhaustive seed sweep.
  std::uint64_t guard = kDefaultBruteForceGuard;
  // Largest number of full-state nodes the exploration may create.
  std::uint64_t node_guard = kDefaultNodeGuard;
  Observe observe = Observe::kStates;
  bool include_seed_position = false;
  // Minimize over the seeds of nested generators as well as the outer seed.
  bool sweep_inner_seeds = false;
  // Explicit seeds instead of the full sweep; the curve is labeled as an
  // upper bound unless `seeds_are_exhaustive` is set.
  std::optional<std::vector<state_t>> seeds;
  bool seeds_are_exhaustive = false;
  // Stop refining once a value reaches the cap (values become min(D, cap)).
  std::optional<std::uint64_t> cap;
};

// D_G(k) for k = 1..kmax over all seeds. Throws GuardExceeded when n is above
// the guard and no seeds were given, or the exploration outgrows node_guard.
DiversityCurve generator_diversity(const GeneratorSpec& spec, std::uint64_t kmax,
                                   const DiversityOptions& options = {});

// Diversity of the tuple sequence T_0, T_1, ... of a t-step generator
// (tuples compared as wholes). Windows start at T_0, whose last coordinate
// is already counter-combined. Only guard, node_guard, seeds and cap are
// read from the options.
DiversityCurve tstep_diversity(const TStepSpec& spec, std::uint64_t kmax,
                               const DiversityOptions& options = {});

// Diversity of a finite sequence of tuples (each tuple one symbol).
DiversityCurve tuple_sequence_diversity(std::span<const Tuple> seq,
                                        std::uint64_t kmax);

struct SeedCycle {
  state_t seed;
  std::uint64_t tail;    // i0: x_{i0} is the first state on the cycle
  std::uint64_t period;  // p
};

struct CycleInfo {
  std::uint64_t length;
  state_t representative;  // smallest state on the cycle
};

struct CycleReport {
  std::uint64_t n = 0;
  std::vector<SeedCycle> seeds;  // indexed by seed
  std::vector<CycleInfo> cycles;  // sorted by representative
  std::uint64_t p_min = 0;
};

// Exact functional-graph decomposition of f. Throws GuardExceeded above the
// guard.
CycleReport cycle_structure(const FunctionTable& f,
                            std::uint64_t guard = kDefaultSweepGuard);

struct IsolatedEqualityViolation {
  std::uint64_t i;
  std::uint64_t j;
  bool successor_equal;
  bool predecessor_equal;
};

inline constexpr std::uint64_t kDefaultIsolatedGuard = std::uint64_t{1} << 24;

// Pairs i < j with i != j (mod n), x_i == x_j and x_{i+1} == x_{j+1} or
// x_{i-1} == x_{j-1}. n == 0 means no modular restriction (any i != j).
// Throws GuardExceeded when seq.size() > guard.
std::vector<IsolatedEqualityViolation> isolated_equality_check(
    std::span<const state_t> seq, std::uint64_t n,
    std::uint64_t guard = kDefaultIsolatedGuard);

struct TheoremBounds {
  std::uint64_t gamma;
  std::uint64_t eta;
  std::uint64_t max() const { return gamma > eta ? gamma : eta; }
};

// Throws DomainError unless 1 <= image_size <= n and k >= 1.
TheoremBounds theorem_bounds(std::uint64_t k, std::uint64_t n,
                             std::uint64_t image_size);

// floor(sqrt(v)) and ceil(sqrt(v)) in exact integer arithmetic.
std::uint64_t isqrt_floor(std::uint64_t v);
std::uint64_t isqrt_ceil(std::uint64_t v);

// |Im f|; nullopt when the backend needs a sweep and n exceeds the guard.
std::optional<std::uint64_t> image_size(const FunctionTable& f,
                                        std::uint64_t guard = kDefaultSweepGuard);

// Search harness for the open question whether D_G(k) <= c sqrt(k) can hold
// for all k with a fixed c: builds meshed-style counter-assisted generators
// over every factorization 2ab <= n (and `random_variants` randomized fills
// of the unconstrained entries of each) and records max_k D(k)/sqrt(k).
struct OpenProblemCandidate {
  std::uint64_t alpha;
  std::uint64_t beta;
  std::uint64_t variant;  // 0 = zero fill, 1.. = randomized fill
  double max_ratio;
  std::uint64_t argmax_k;
  std::uint64_t total;
};

struct OpenProblemReport {
  std::uint64_t n;
  std::vector<OpenProblemCandidate> candidates;  // sorted by max_ratio
};

OpenProblemReport open_problem_search(std::uint64_t n,
                                      std::uint64_t random_variants,
                                      std::uint64_t rng_seed);

}  // namespace cagen

#endif  // CAGEN_ANALYSIS_H_
