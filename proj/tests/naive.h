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
// Brute-force reference implementations used as test oracles. They share no
// code with the library: their own arithmetic, plain simulation and
// std::set window counts.

#ifndef CAGEN_TESTS_NAIVE_H_
#define CAGEN_TESTS_NAIVE_H_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace naive {

using u64 = std::uint64_t;

enum class Op { kAdd, kSub, kXor };

inline u64 combine(Op op, u64 a, u64 b, u64 n) {
  switch (op) {
    case Op::kAdd:
      return (a + b) % n;
    case Op::kSub:
      return (a + n - b) % n;
    case Op::kXor:
      return a ^ b;
  }
  return 0;
}

// x_0 = seed, x_i = f(x_{i-1}) op ((start + i) mod n).
inline std::vector<u64> ca_run(const std::vector<u64>& f, Op op, u64 seed, u64 len,
                               u64 start = 0) {
  const u64 n = f.size();
  std::vector<u64> x{seed};
  for (u64 i = 1; i < len; ++i) x.push_back(combine(op, f[x.back()], (start + i) % n, n));
  return x;
}

inline std::vector<u64> iter_run(const std::vector<u64>& f, u64 seed, u64 len) {
  std::vector<u64> x{seed};
  for (u64 i = 1; i < len; ++i) x.push_back(f[x.back()]);
  return x;
}

inline u64 distinct(const std::vector<u64>& seq, u64 from, u64 k) {
  std::set<u64> s(seq.begin() + from, seq.begin() + from + k);
  return s.size();
}

// min over windows of length k starting at positions >= first.
inline u64 window_min(const std::vector<u64>& seq, u64 k, u64 first = 0) {
  u64 best = ~u64{0};
  for (u64 p = first; p + k <= seq.size(); ++p) best = std::min(best, distinct(seq, p, k));
  return best;
}

// D(k) for k = 1..kmax of a counter-assisted generator over every seed.
// The (state, counter) pair recurs within n^2 steps, so a run of length
// n^2 + kmax + 1 covers every window from x_1 on.
inline std::vector<u64> ca_diversity(const std::vector<u64>& f, Op op, u64 kmax) {
  const u64 n = f.size();
  std::vector<u64> d(kmax, ~u64{0});
  for (u64 seed = 0; seed < n; ++seed) {
    const auto x = ca_run(f, op, seed, n * n + kmax + 1);
    for (u64 k = 1; k <= kmax; ++k) d[k - 1] = std::min(d[k - 1], window_min(x, k, 1));
  }
  return d;
}

// Shortest cycle of the functional graph by following each start n steps
// (landing on its cycle) and measuring the cycle.
inline u64 min_cycle(const std::vector<u64>& f) {
  const u64 n = f.size();
  u64 best = n;
  for (u64 s = 0; s < n; ++s) {
    u64 x = s;
    for (u64 i = 0; i < n; ++i) x = f[x];
    u64 len = 1;
    for (u64 y = f[x]; y != x; y = f[y]) ++len;
    best = std::min(best, len);
  }
  return best;
}

inline u64 image(const std::vector<u64>& f) {
  return std::set<u64>(f.begin(), f.end()).size();
}

inline u64 ceil_sqrt(u64 v) {
  u64 r = 0;
  while (r * r < v) ++r;
  return r;
}

inline u64 bound(u64 k, u64 n, u64 im) {
  const u64 gamma = k <= n ? ceil_sqrt(k - 1) : ceil_sqrt(n);
  const u64 m = std::min(k, n);
  const u64 eta = (m + im - 1) / im;
  return std::max(gamma, eta);
}

// Pairs i < j, i != j mod n (n == 0: any), x_i == x_j with equal successors
// or predecessors.
inline u64 isolated_violations(const std::vector<u64>& x, u64 n) {
  u64 v = 0;
  for (u64 i = 0; i < x.size(); ++i) {
    for (u64 j = i + 1; j < x.size(); ++j) {
      if (x[i] != x[j] || (n != 0 && (j - i) % n == 0)) continue;
      const bool succ = j + 1 < x.size() && x[i + 1] == x[j + 1];
      const bool pred = i > 0 && x[i - 1] == x[j - 1];
      if (succ || pred) ++v;
    }
  }
  return v;
}

}  // namespace naive

#endif  // CAGEN_TESTS_NAIVE_H_
