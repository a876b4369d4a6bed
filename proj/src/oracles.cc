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

#include "cagen/oracles.h"

#include <cstdio>
#include <string>
#include <unordered_map>

#include "cagen/errors.h"
#include "cagen/rng.h"

namespace cagen {

namespace {

constexpr std::array<std::string_view, 4> kOracleNames{
    "O1_random", "O2_lazy_f", "O3_random_table", "O4_keyed_mixer"};

double ratio(std::uint64_t a, std::uint64_t b) {
  return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
}

}  // namespace

std::string_view oracle_name(OracleKind k) {
  return kOracleNames[static_cast<std::size_t>(k)];
}

OracleKind oracle_from_name(std::string_view name) {
  for (OracleKind k : kAllOracles) {
    if (oracle_name(k) == name) return k;
  }
  throw ConfigError("unknown oracle '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "consistent_with_counter_assisted";
    case Verdict::kRandomLike:
      return "random_like";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::vector<state_t> counter_assisted_transcript(const FunctionTable& f,
                                                 state_t seed, std::uint64_t k,
                                                 const LatinOp& op) {
  const StateSpace& space = f.space();
  op.check_compatible(space);
  space.check(seed, "seed");
  std::vector<state_t> out;
  out.reserve(k);
  state_t x = seed;
  for (std::uint64_t i = 1; i <= k; ++i) {
    x = op.apply_unchecked(space, f(x), space.reduce(i));
    out.push_back(x);
  }
  return out;
}

OracleTranscript sample(OracleKind which, std::uint64_t n, std::uint64_t k,
                        std::uint64_t rng_seed, const LatinOp& op) {
  if (k == 0) throw DomainError("transcript length k must be at least 1");
  if (n < 2) throw DomainError("oracles need n >= 2");
  const StateSpace space(n);
  op.check_compatible(space);
  OracleTranscript t;
  t.which = which;
  t.k = k;
  t.n = n;
  t.rng_seed = rng_seed;
  Rng rng(rng_seed);
  switch (which) {
    case OracleKind::kO1Random: {
      t.states.reserve(k);
      for (std::uint64_t i = 0; i < k; ++i) t.states.push_back(rng.below(n));
      break;
    }
    case OracleKind::kO2LazyF: {
      std::unordered_map<state_t, state_t> f;
      state_t x = rng.below(n);
      t.states.reserve(k);
      for (std::uint64_t i = 1; i <= k; ++i) {
        auto it = f.find(x);
        if (it == f.end()) {
          it = f.emplace(x, rng.below(n)).first;
        } else {
          t.birthday_flag = true;
        }
        x = op.apply_unchecked(space, it->second, space.reduce(i));
        t.states.push_back(x);
      }
      break;
    }
    case OracleKind::kO3RandomTable: {
      if (n > kOracleTableGuard) {
        throw GuardExceeded("O3 materializes an n-entry table; n = " +
                            std::to_string(n) + " exceeds the guard");
      }
      const auto f = FunctionTable::table(space, rng.table(n));
      t.states = counter_assisted_transcript(f, rng.below(n), k, op);
      break;
    }
    case OracleKind::kO4KeyedMixer: {
      char key[32];
      std::snprintf(key, sizeof key, "oracle4/%016llx",
                    static_cast<unsigned long long>(rng.next()));
      const auto f = FunctionTable::keyed_mixer(space, KeyedMixer(key, 4));
      t.states = counter_assisted_transcript(f, rng.below(n), k, op);
      break;
    }
  }
  return t;
}

DistinguisherResult birthday_distinguisher(std::span<const state_t> states,
                                           std::uint64_t n, const LatinOp& op,
                                           std::uint64_t first_index) {
  if (states.size() < 2) throw DomainError("transcript needs at least 2 states");
  const StateSpace space(n);
  op.check_compatible(space);
  for (state_t v : states) space.check(v, "transcript state");
  // The relation is an equality, so checking each occurrence against the
  // previous occurrence of the same value covers every pair.
  std::unordered_map<state_t, std::size_t> last;
  auto recovered = [&](std::size_t pos) {
    const state_t counter = space.reduce(first_index + pos + 1);
    return invert_left(op, space, counter, states[pos + 1]);
  };
  DistinguisherResult r;
  for (std::size_t j = 0; j + 1 < states.size(); ++j) {
    auto [it, fresh] = last.try_emplace(states[j], j);
    if (fresh) continue;
    const std::size_t i = it->second;
    it->second = j;
    ++r.collisions;
    if (recovered(i) != recovered(j)) ++r.violations;
  }
  if (r.collisions == 0) {
    r.verdict = Verdict::kInconclusive;
  } else {
    r.verdict = r.violations == 0 ? Verdict::kConsistent : Verdict::kRandomLike;
  }
  return r;
}

double OracleStats::birthday_rate() const { return ratio(birthday_flags, trials); }
double OracleStats::collision_rate() const { return ratio(with_collision, trials); }
double OracleStats::consistent_given_collision() const {
  return ratio(consistent, with_collision);
}

double exact_birthday_probability(std::uint64_t n, std::uint64_t k) {
  double none = 1.0;
  for (std::uint64_t i = 1; i < k; ++i) {
    if (i >= n) return 1.0;
    none *= 1.0 - static_cast<double>(i) / static_cast<double>(n);
  }
  return 1.0 - none;
}

ExperimentReport distinguishing_experiment(std::uint64_t n, std::uint64_t k,
                                           std::uint64_t trials,
                                           std::uint64_t rng_seed) {
  if (trials == 0) throw DomainError("trials must be at least 1");
  ExperimentReport rep;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  rep.rng_seed = rng_seed;
  rep.estimate_k2_over_2n =
      static_cast<double>(k) * static_cast<double>(k) / (2.0 * static_cast<double>(n));
  rep.exact_birthday = exact_birthday_probability(n, k);
  const LatinOp op = LatinOp::add_mod();
  for (OracleKind which : kAllOracles) {
    OracleStats& s = rep.oracles[static_cast<std::size_t>(which)];
    s.which = which;
    s.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::uint64_t seed =
          stream_seed(rng_seed, 4 * t + static_cast<std::uint64_t>(which));
      const OracleTranscript tr = sample(which, n, k, seed, op);
      if (tr.birthday_flag) ++s.birthday_flags;
      if (tr.states.size() < 2) {
        ++s.inconclusive;
        continue;
      }
      const DistinguisherResult d = birthday_distinguisher(tr.states, n, op);
      if (d.collisions > 0) ++s.with_collision;
      switch (d.verdict) {
        case Verdict::kConsistent:
          ++s.consistent;
          break;
        case Verdict::kRandomLike:
          ++s.random_like;
          break;
        case Verdict::kInconclusive:
          ++s.inconclusive;
          break;
      }
    }
  }
  return rep;
}

}  // namespace cagen
