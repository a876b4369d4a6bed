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

#include <gtest/gtest.h>

#include "cagen/analysis.h"
#include "cagen/errors.h"
#include "cagen/generator.h"
#include "cagen/multistep.h"
#include "cagen/rng.h"
#include "naive.h"

namespace cagen {
namespace {

std::vector<std::uint64_t> curve_values(const DiversityCurve& c) { return c.values; }

TEST(SequenceDiversity, MatchesWindowCounts) {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<state_t> seq(200);
    for (auto& v : seq) v = rng.below(1 + trial);
    const auto c = sequence_diversity(seq, seq.size());
    for (std::uint64_t k = 1; k <= seq.size(); k += 7) EXPECT_EQ(c.at(k), naive::window_min(seq, k));
    EXPECT_FALSE(c.check_chain(1 + trial).has_value());
  }
  EXPECT_THROW(sequence_diversity(std::vector<state_t>{1, 2}, 3), DomainError);
  EXPECT_THROW(sequence_diversity(std::vector<state_t>{1, 2}, 0), DomainError);
}

TEST(SequenceDiversity, ChainCheckCatchesBrokenCurves) {
  DiversityCurve c;
  c.kmax = 3;
  c.values = {1, 3, 3};
  EXPECT_TRUE(c.check_chain(10).has_value());
  c.values = {1, 2, 1};
  EXPECT_TRUE(c.check_chain(10).has_value());
  c.values = {1, 2, 3};
  EXPECT_TRUE(c.check_chain(2).has_value());
  EXPECT_FALSE(c.check_chain(3).has_value());
}

TEST(GeneratorDiversity, CounterAssistedMatchesBruteForce) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = trial % 2 ? 8 : 16;
    auto table = rng.table(n);
    if (trial % 5 == 0) std::fill(table.begin(), table.end(), rng.below(n));
    const bool use_xor = trial % 3 == 0;
    const auto spec = GeneratorSpec::counter_assisted(
        FunctionTable::table(StateSpace(n), table),
        use_xor ? LatinOp::xor_op() : LatinOp::add_mod());
    const auto c = generator_diversity(spec, 2 * n);
    EXPECT_EQ(curve_values(c), naive::ca_diversity(table, use_xor ? naive::Op::kXor : naive::Op::kAdd, 2 * n))
        << "trial " << trial;
    EXPECT_FALSE(c.check_chain(n).has_value());
  }
}

TEST(GeneratorDiversity, CapGivesTheTruncatedCurve) {
  Rng rng(12);
  const std::uint64_t n = 64;
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = GeneratorSpec::counter_assisted(FunctionTable::table(StateSpace(n), rng.table(n)));
    const auto full = generator_diversity(spec, n);
    DiversityOptions o;
    o.cap = 9;
    const auto capped = generator_diversity(spec, n, o);
    for (std::uint64_t k = 1; k <= n; ++k) EXPECT_EQ(capped.at(k), std::min<std::uint64_t>(full.at(k), 9));
  }
}

TEST(GeneratorDiversity, IterativeEqualsMinOfKAndShortestCycle) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = 50 + trial;
    const auto table = rng.table(n);
    const auto f = FunctionTable::table(StateSpace(n), table);
    const auto c = generator_diversity(GeneratorSpec::iterative(f), n);
    const std::uint64_t p = naive::min_cycle(table);
    EXPECT_EQ(cycle_structure(f).p_min, p);
    for (std::uint64_t k = 1; k <= n; ++k) EXPECT_EQ(c.at(k), std::min(k, p));
    ASSERT_TRUE(c.total.has_value());
    EXPECT_EQ(*c.total, p);
  }
}

TEST(GeneratorDiversity, BoundsHoldForEveryCombiner) {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = 32;
    auto table = rng.table(n);
    if (trial % 3 == 1) for (auto& v : table) v %= 1 + rng.below(4);
    const LatinOp op = trial % 3 == 0 ? LatinOp::xor_op() : trial % 3 == 1 ? LatinOp::sub_mod() : LatinOp::add_mod();
    const auto spec = GeneratorSpec::counter_assisted(FunctionTable::table(StateSpace(n), table), op);
    const auto c = generator_diversity(spec, 3 * n);
    const std::uint64_t im = naive::image(table);
    for (std::uint64_t k = 1; k <= 3 * n; ++k) {
      EXPECT_GE(c.at(k), naive::bound(k, n, im)) << "k=" << k;
      EXPECT_EQ(theorem_bounds(k, n, im).max(), naive::bound(k, n, im));
    }
  }
}

TEST(GeneratorDiversity, SeedPositionCounterexample) {
  // f == 0, seed 1: x = (1, 1, 2, 3, ...). A window from x_0 sees 1 value in 2.
  const auto spec = GeneratorSpec::counter_assisted(FunctionTable::constant(StateSpace(8), 0));
  DiversityOptions o;
  o.include_seed_position = true;
  EXPECT_EQ(generator_diversity(spec, 8, o).at(2), 1u);
  EXPECT_EQ(generator_diversity(spec, 8).at(2), 2u);
}

TEST(GeneratorDiversity, GuardAndSampledSeeds) {
  const auto spec = GeneratorSpec::counter_assisted(FunctionTable::negation(StateSpace(1 << 17)));
  EXPECT_THROW(generator_diversity(spec, 4), GuardExceeded);
  DiversityOptions o;
  o.seeds = std::vector<state_t>{0, 5, 77};
  const auto c = generator_diversity(spec, 4, o);
  EXPECT_TRUE(c.upper_bound);
  DiversityOptions tiny;
  tiny.node_guard = 100;
  EXPECT_THROW(generator_diversity(GeneratorSpec::counter_assisted(FunctionTable::negation(StateSpace(64))), 4, tiny),
               GuardExceeded);
}

TEST(GeneratorDiversity, OutputObservation) {
  const StateSpace s(16);
  const auto spec = GeneratorSpec::counter_assisted(FunctionTable::negation(s), OutputFunction::truncate(s, 1),
                                                    LatinOp::add_mod());
  DiversityOptions o;
  o.observe = Observe::kOutputs;
  const auto c = generator_diversity(spec, 16, o);
  for (std::uint64_t k = 1; k <= 16; ++k) EXPECT_LE(c.at(k), 2u);
}

TEST(GeneratorDiversity, ExplicitAssistUsesPerSeedRuns) {
  const std::uint64_t n = 16;
  const StateSpace s(n);
  std::vector<state_t> assist;
  for (std::uint64_t i = 0; i < 3 * n; ++i) assist.push_back(i % n);
  const auto table = Rng(15).table(n);
  const auto spec = GeneratorSpec::sequence_assisted(FunctionTable::table(s, table), OutputFunction::identity(s),
                                                     LatinOp::add_mod(), assist);
  const auto c = generator_diversity(spec, n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t best = ~0ull;
    for (state_t seed = 0; seed < n; ++seed) {
      best = std::min(best, naive::window_min(naive::ca_run(table, naive::Op::kAdd, seed, 3 * n), k, 1));
    }
    EXPECT_EQ(c.at(k), best) << k;
  }
}

TEST(CycleStructure, ReportsTailsAndPeriods) {
  const StateSpace s(6);
  // 0 -> 1 -> 2 -> 1, 3 -> 3, 4 -> 0, 5 -> 4
  const auto f = FunctionTable::table(s, {1, 2, 1, 3, 0, 4});
  const auto r = cycle_structure(f);
  EXPECT_EQ(r.p_min, 1u);
  ASSERT_EQ(r.cycles.size(), 2u);
  EXPECT_EQ(r.cycles[0].representative, 1u);
  EXPECT_EQ(r.cycles[0].length, 2u);
  EXPECT_EQ(r.seeds[5].tail, 3u);
  EXPECT_EQ(r.seeds[5].period, 2u);
  EXPECT_EQ(r.seeds[3].tail, 0u);
  EXPECT_EQ(r.seeds[3].period, 1u);
  EXPECT_THROW(cycle_structure(FunctionTable::negation(StateSpace(1 << 12)), 100), GuardExceeded);
}

TEST(IsolatedEquality, AgreesWithPairScan) {
  Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = 12;
    std::vector<state_t> seq(60);
    for (auto& v : seq) v = rng.below(4);
    EXPECT_EQ(isolated_equality_check(seq, n).size(), naive::isolated_violations(seq, n));
    EXPECT_EQ(isolated_equality_check(seq, 0).size(), naive::isolated_violations(seq, 0));
  }
}

TEST(IsolatedEquality, CounterAssistedRunsHaveNone) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t n = 20;
    const auto table = rng.table(n);
    const auto x = naive::ca_run(table, naive::Op::kSub, rng.below(n), 120);
    EXPECT_EQ(naive::isolated_violations(x, n), 0u);
    EXPECT_TRUE(isolated_equality_check(x, n).empty());
  }
}

TEST(Bounds, IntegerSquareRoots) {
  for (std::uint64_t v = 0; v < 5000; ++v) {
    EXPECT_EQ(isqrt_ceil(v), naive::ceil_sqrt(v));
    const auto f = isqrt_floor(v);
    EXPECT_LE(f * f, v);
    EXPECT_GT((f + 1) * (f + 1), v);
  }
  EXPECT_EQ(isqrt_floor(~std::uint64_t{0}), 0xffffffffu);
  EXPECT_EQ(isqrt_ceil(~std::uint64_t{0}), std::uint64_t{1} << 32);
  EXPECT_THROW(theorem_bounds(0, 8, 1), DomainError);
  EXPECT_THROW(theorem_bounds(1, 8, 9), DomainError);
}

TEST(TStepDiversity, TuplesAreAllDistinct) {
  Rng rng(18);
  for (unsigned t : {2u, 3u}) {
    const std::uint64_t n = 16;
    TStepSpec spec{FunctionTable::table(StateSpace(n), rng.table(n)), t};
    const auto c = tstep_diversity(spec, n);
    for (std::uint64_t k = 1; k <= n; ++k) EXPECT_EQ(c.at(k), k);
    // Cross-check one seed against the tuple runner.
    const auto tuples = run_tuples(spec, 3, n);
    const auto direct = tuple_sequence_diversity(tuples, n);
    for (std::uint64_t k = 1; k <= n; ++k) EXPECT_EQ(direct.at(k), k);
  }
}

TEST(OpenProblemSearch, RatiosAreConsistent) {
  const auto r = open_problem_search(32, 2, 1);
  ASSERT_FALSE(r.candidates.empty());
  for (std::size_t i = 1; i < r.candidates.size(); ++i) {
    EXPECT_LE(r.candidates[i - 1].max_ratio, r.candidates[i].max_ratio);
  }
  for (const auto& c : r.candidates) {
    EXPECT_LE(2 * c.alpha * c.beta, 32u);
    EXPECT_GE(c.max_ratio, 1.0);
  }
}

}  // namespace
}  // namespace cagen
