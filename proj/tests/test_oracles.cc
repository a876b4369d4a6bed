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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "cagen/errors.h"
#include "cagen/oracles.h"
#include "cagen/rng.h"

namespace cagen {
namespace {

// Upper-tail p-value of Pearson's statistic for uniform counts.
double uniformity_p(const std::vector<std::uint64_t>& counts) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expect = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) stat += (c - expect) * (c - expect) / expect;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(Oracles, TranscriptsAreUniformPerPosition) {
  const std::uint64_t n = 32;
  for (OracleKind which : kAllOracles) {
    std::vector<std::uint64_t> first(n), later(n);
    for (std::uint64_t t = 0; t < 20000; ++t) {
      const auto tr = sample(which, n, 8, stream_seed(77, t));
      ASSERT_EQ(tr.states.size(), 8u);
      ++first[tr.states[0]];
      ++later[tr.states[7]];
    }
    EXPECT_GT(uniformity_p(first), 1e-4) << oracle_name(which);
    EXPECT_GT(uniformity_p(later), 1e-4) << oracle_name(which);
  }
}

TEST(Oracles, LazyFFlagRateMatchesTheBirthdayProduct) {
  const std::uint64_t n = 64, k = 12, trials = 20000;
  std::uint64_t flagged = 0;
  for (std::uint64_t t = 0; t < trials; ++t) flagged += sample(OracleKind::kO2LazyF, n, k, t).birthday_flag;
  const double p = exact_birthday_probability(n, k);
  const double sd = std::sqrt(p * (1 - p) / trials);
  EXPECT_NEAR(static_cast<double>(flagged) / trials, p, 5 * sd);
}

TEST(Oracles, ExactBirthdayProduct) {
  EXPECT_DOUBLE_EQ(exact_birthday_probability(365, 1), 0.0);
  EXPECT_NEAR(exact_birthday_probability(365, 23), 0.507297, 1e-6);
  EXPECT_NEAR(exact_birthday_probability(1u << 16, 64), 0.030302, 1e-5);
  EXPECT_DOUBLE_EQ(exact_birthday_probability(4, 5), 1.0);
}

TEST(Distinguisher, CounterAssistedRunsAreNeverRandomLike) {
  Rng rng(30);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = 16;
    const auto f = FunctionTable::table(StateSpace(n), rng.table(n));
    const auto op = trial % 2 ? LatinOp::xor_op() : LatinOp::sub_mod();
    const auto x = counter_assisted_transcript(f, rng.below(n), 40, op);
    const auto r = birthday_distinguisher(x, n, op);
    EXPECT_NE(r.verdict, Verdict::kRandomLike);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_GT(r.collisions, 0u);
    EXPECT_EQ(r.verdict, Verdict::kConsistent);
  }
}

TEST(Distinguisher, HandBuiltViolation) {
  // x_1 = 3, x_2 = 5, x_3 = 3, x_4 = 0: f(3) would be 5 - 2 = 3 and 0 - 4 = 12.
  const std::vector<state_t> x{3, 5, 3, 0};
  const auto r = birthday_distinguisher(x, 16, LatinOp::add_mod());
  EXPECT_EQ(r.verdict, Verdict::kRandomLike);
  EXPECT_EQ(r.collisions, 1u);
  EXPECT_EQ(r.violations, 1u);
  const std::vector<state_t> y{1, 2, 3, 4};
  EXPECT_EQ(birthday_distinguisher(y, 16, LatinOp::add_mod()).verdict, Verdict::kInconclusive);
  EXPECT_THROW(birthday_distinguisher(std::vector<state_t>{1}, 16, LatinOp::add_mod()), DomainError);
}

TEST(Distinguisher, RandomTranscriptsPassAtRateOneOverN) {
  // A single evaluable collision in a uniform transcript agrees by chance
  // with probability 1/n.
  const std::uint64_t n = 256, k = 24;
  std::uint64_t single = 0, consistent = 0;
  for (std::uint64_t t = 0; t < 40000; ++t) {
    const auto tr = sample(OracleKind::kO1Random, n, k, stream_seed(5, t));
    const auto r = birthday_distinguisher(tr.states, n, LatinOp::add_mod());
    if (r.collisions != 1) continue;
    ++single;
    consistent += r.verdict == Verdict::kConsistent;
  }
  ASSERT_GT(single, 5000u);
  const double p = 1.0 / n;
  const double rate = static_cast<double>(consistent) / single;
  EXPECT_NEAR(rate, p, 5 * std::sqrt(p * (1 - p) / single));
}

TEST(Experiment, DeterministicAndWellFormed) {
  const auto a = distinguishing_experiment(1024, 16, 500, 3);
  const auto b = distinguishing_experiment(1024, 16, 500, 3);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(a.oracles[i].consistent, b.oracles[i].consistent);
    EXPECT_EQ(a.oracles[i].birthday_flags, b.oracles[i].birthday_flags);
    const auto& s = a.oracles[i];
    EXPECT_EQ(s.consistent + s.random_like + s.inconclusive, s.trials);
  }
  EXPECT_EQ(a.oracles[2].random_like, 0u);
  EXPECT_EQ(a.oracles[3].random_like, 0u);
  EXPECT_DOUBLE_EQ(a.estimate_k2_over_2n, 16.0 * 16.0 / 2048.0);
  EXPECT_THROW(sample(OracleKind::kO1Random, 1, 4, 0), DomainError);
  EXPECT_THROW(sample(OracleKind::kO1Random, 16, 0, 0), DomainError);
  EXPECT_THROW(oracle_from_name("O5"), ConfigError);
}

}  // namespace
}  // namespace cagen
