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

#include <algorithm>
#include <cmath>

#include "cagen/adversarial.h"
#include "cagen/analysis.h"
#include "cagen/errors.h"
#include "cagen/rng.h"

namespace cagen {

OpenProblemReport open_problem_search(std::uint64_t n,
                                      std::uint64_t random_variants,
                                      std::uint64_t rng_seed) {
  if (n < 4 || n % 2 != 0) throw DomainError("n must be even and at least 4");
  if (n > (std::uint64_t{1} << 12)) {
    throw GuardExceeded("open-problem search sweeps every seed; n must be <= 4096");
  }
  OpenProblemReport report;
  report.n = n;
  const std::uint64_t half = n / 2;
  for (std::uint64_t alpha = 1; alpha <= half; ++alpha) {
    if (half % alpha != 0) continue;
    const std::uint64_t beta = half / alpha;
    for (std::uint64_t variant = 0; variant <= random_variants; ++variant) {
      MeshedOptions opts;
      opts.alpha = alpha;
      opts.beta = beta;
      if (variant > 0) opts.random_fill_seed = stream_seed(rng_seed, alpha * 1000003 + variant);
      MeshedConstruction c;
      try {
        c = build_meshed(n, MeshedVariant::kCustomAddMod, opts);
      } catch (const ConstructionError&) {
        continue;
      }
      const DiversityCurve curve = generator_diversity(c.generator(), n);
      OpenProblemCandidate cand{alpha, beta, variant, 0.0, 1, curve.total.value_or(0)};
      for (std::uint64_t k = 1; k <= n; ++k) {
        const double r = static_cast<double>(curve.at(k)) / std::sqrt(static_cast<double>(k));
        if (r > cand.max_ratio) {
          cand.max_ratio = r;
          cand.argmax_k = k;
        }
      }
      report.candidates.push_back(cand);
    }
  }
  std::stable_sort(report.candidates.begin(), report.candidates.end(),
                   [](const auto& a, const auto& b) { return a.max_ratio < b.max_ratio; });
  return report;
}

}  // namespace cagen
