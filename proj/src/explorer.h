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
// Explicit functional-graph exploration over packed 64-bit node keys.
// Internal to the library.

#ifndef CAGEN_SRC_EXPLORER_H_
#define CAGEN_SRC_EXPLORER_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cagen/errors.h"

namespace cagen::detail {

// Open-addressing map from 64-bit keys to dense ids 0, 1, 2, ...
class KeyIndex {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  KeyIndex() { rehash(1024); }

  std::size_t size() const { return count_; }

  // Returns (id, inserted).
  std::pair<std::uint32_t, bool> intern(std::uint64_t key) {
    if ((count_ + 1) * 4 > slots_.size() * 3) rehash(slots_.size() * 2);
    std::size_t h = hash(key) & mask_;
    while (slots_[h].id != kNone) {
      if (slots_[h].key == key) return {slots_[h].id, false};
      h = (h + 1) & mask_;
    }
    slots_[h] = {key, static_cast<std::uint32_t>(count_)};
    return {static_cast<std::uint32_t>(count_++), true};
  }

 private:
  struct Slot {
    std::uint64_t key;
    std::uint32_t id;
  };

  static std::uint64_t hash(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void rehash(std::size_t capacity) {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(capacity, Slot{0, kNone});
    mask_ = capacity - 1;
    for (const Slot& s : old) {
      if (s.id == kNone) continue;
      std::size_t h = hash(s.key) & mask_;
      while (slots_[h].id != kNone) h = (h + 1) & mask_;
      slots_[h] = s;
    }
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

struct FunctionalGraph {
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> obs;       // interned observation id
  std::vector<std::uint8_t> eligible;   // window may start here
  std::uint32_t num_obs = 0;
};

// Builds the closure of `starts` under `succ`. Nodes reached as successors
// are always eligible window starts; start nodes only if `starts_eligible`.
template <class Succ, class Observe>
FunctionalGraph explore(const std::vector<std::uint64_t>& starts,
                        bool starts_eligible, Succ&& succ, Observe&& observe,
                        std::uint64_t node_guard) {
  FunctionalGraph g;
  KeyIndex nodes;
  KeyIndex observations;
  auto add = [&](std::uint64_t key) {
    auto [id, inserted] = nodes.intern(key);
    if (inserted) {
      if (nodes.size() > node_guard) {
        throw GuardExceeded("state exploration exceeded " +
                            std::to_string(node_guard) +
                            " nodes; sample seeds instead");
      }
      g.next.push_back(0);
      g.eligible.push_back(0);
      g.obs.push_back(observations.intern(observe(key)).first);
    }
    return std::pair{id, inserted};
  };
  for (std::uint64_t start : starts) {
    auto [id, inserted] = add(start);
    if (starts_eligible) g.eligible[id] = 1;
    std::uint64_t key = start;
    while (inserted) {
      const std::uint64_t nk = succ(key);
      auto [nid, fresh] = add(nk);
      g.next[id] = nid;
      g.eligible[nid] = 1;
      id = nid;
      key = nk;
      inserted = fresh;
    }
  }
  g.num_obs = static_cast<std::uint32_t>(observations.size());
  return g;
}

// values[k-1] = min over eligible v of distinct observations among the k
// nodes starting at v, capped at `cap`.
inline std::vector<std::uint64_t> graph_curve(const FunctionalGraph& g,
                                              std::uint64_t kmax,
                                              std::optional<std::uint64_t> cap) {
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(kmax, kInf);
  std::vector<std::uint32_t> stamp(g.num_obs, 0);
  std::uint32_t epoch = 0;
  const std::uint64_t cap_value = cap.value_or(kInf);
  for (std::uint32_t v = 0; v < g.next.size(); ++v) {
    if (!g.eligible[v]) continue;
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    const std::uint64_t limit = std::min(cap_value, best[kmax - 1]);
    std::uint64_t distinct = 0;
    std::uint32_t u = v;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      if (stamp[g.obs[u]] != epoch) {
        stamp[g.obs[u]] = epoch;
        ++distinct;
      }
      if (distinct < best[k - 1]) best[k - 1] = distinct;
      if (distinct >= limit) break;
      u = g.next[u];
    }
  }
  for (auto& b : best) b = std::min(b, cap_value);
  return best;
}

// Minimum number of distinct observations on any cycle of the graph.
inline std::uint64_t graph_total(const FunctionalGraph& g) {
  const std::size_t size = g.next.size();
  std::vector<std::uint32_t> color(size, 0);  // 0 new, else walk id
  std::vector<std::uint32_t> stamp(g.num_obs, 0);
  std::uint32_t epoch = 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::uint32_t walk = 0;
  for (std::uint32_t s = 0; s < size; ++s) {
    if (color[s] != 0) continue;
    ++walk;
    std::uint32_t u = s;
    while (color[u] == 0) {
      color[u] = walk;
      u = g.next[u];
    }
    if (color[u] != walk) continue;  // ran into an earlier walk
    ++epoch;
    std::uint64_t distinct = 0;
    std::uint32_t c = u;
    do {
      if (stamp[g.obs[c]] != epoch) {
        stamp[g.obs[c]] = epoch;
        ++distinct;
      }
      c = g.next[c];
    } while (c != u);
    best = std::min(best, distinct);
  }
  return best;
}

}  // namespace cagen::detail

#endif  // CAGEN_SRC_EXPLORER_H_
