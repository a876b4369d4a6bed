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
// Replayable randomness. Every experiment draws from std::mt19937_64, whose
// output sequence is fixed by the standard, and reduces to a range with the
// rejection rule below instead of std::uniform_int_distribution (whose
// algorithm is implementation-defined). Results are therefore bit-identical
// across standard libraries.
//
// Independent streams (one per trial, per table, ...) are seeded with
// stream_seed(master, stream) = splitmix64(master ^ splitmix64(stream)).

#ifndef CAGEN_RNG_H_
#define CAGEN_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace cagen {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64_mix(master ^ splitmix64_mix(stream));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t master, std::uint64_t stream)
      : engine_(stream_seed(master, stream)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in {0, ..., bound-1}; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
    // Largest multiple of bound representable in 64 bits.
    const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform random table of n entries in {0, ..., n-1}.
  std::vector<std::uint64_t> table(std::uint64_t n) {
    std::vector<std::uint64_t> t(n);
    for (auto& v : t) v = below(n);
    return t;
  }

  // Uniform random permutation (Fisher-Yates).
  std::vector<std::uint64_t> permutation(std::uint64_t n) {
    std::vector<std::uint64_t> p(n);
    for (std::uint64_t i = 0; i < n; ++i) p[i] = i;
    for (std::uint64_t i = n; i > 1; --i) {
      const std::uint64_t j = below(i);
      std::swap(p[i - 1], p[j]);
    }
    return p;
  }

  // Uniform random permutation consisting of a single n-cycle: a random
  // ordering of X, each element mapped to its successor in the ordering.
  std::vector<std::uint64_t> single_cycle(std::uint64_t n) {
    std::vector<std::uint64_t> order = permutation(n);
    std::vector<std::uint64_t> p(n);
    for (std::uint64_t i = 0; i < n; ++i) p[order[i]] = order[(i + 1) % n];
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cagen

#endif  // CAGEN_RNG_H_
