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

#include "cagen/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cagen/errors.h"
#include "explorer.h"

namespace cagen {

std::optional<std::string> DiversityCurve::check_chain(std::uint64_t n) const {
  for (std::uint64_t k = 1; k <= values.size(); ++k) {
    const std::uint64_t d = values[k - 1];
    if (d < 1) return "D(" + std::to_string(k) + ") = 0";
    if (d > n) return "D(" + std::to_string(k) + ") exceeds n";
    if (k < values.size()) {
      const std::uint64_t e = values[k];
      if (e < d || e > d + 1) {
        return "D(" + std::to_string(k + 1) + ") = " + std::to_string(e) +
               " breaks the chain after D(" + std::to_string(k) + ") = " +
               std::to_string(d);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Rewrites values as dense ids 0..m-1; returns m.
std::uint64_t compress(std::span<const state_t> seq, std::vector<std::uint32_t>& ids) {
  std::unordered_map<state_t, std::uint32_t> index;
  index.reserve(seq.size());
  ids.resize(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto [it, fresh] = index.try_emplace(seq[i], static_cast<std::uint32_t>(index.size()));
    ids[i] = it->second;
  }
  return index.size();
}

std::vector<std::uint64_t> sliding_minima(const std::vector<std::uint32_t>& ids,
                                          std::uint64_t m, std::uint64_t kmax) {
  std::vector<std::uint64_t> values(kmax);
  std::vector<std::uint32_t> count(m);
  const std::size_t len = ids.size();
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    std::fill(count.begin(), count.end(), 0);
    std::uint64_t distinct = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (count[ids[i]]++ == 0) ++distinct;
    }
    std::uint64_t best = distinct;
    for (std::size_t i = k; i < len; ++i) {
      if (count[ids[i]]++ == 0) ++distinct;
      if (--count[ids[i - k]] == 0) --distinct;
      best = std::min(best, distinct);
    }
    values[k - 1] = best;
  }
  return values;
}

unsigned bits_for(std::uint64_t n) {
  return n <= 1 ? 1u : static_cast<unsigned>(std::bit_width(n - 1));
}

void check_kmax(std::uint64_t kmax) {
  if (kmax == 0) throw DomainError("kmax must be at least 1");
}

// Packs per-level states and an optional phase into one 64-bit key.
class StateCodec {
 public:
  StateCodec(std::uint64_t n, std::size_t depth, bool phased)
      : bits_(bits_for(n)), depth_(depth), phased_(phased) {
    const std::uint64_t total = bits_ * (depth + (phased ? 1 : 0));
    if (total > 64) {
      throw GuardExceeded("full generator state needs " + std::to_string(total) +
                          " bits; exhaustive exploration supports 64");
    }
    mask_ = bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
  }

  std::uint64_t encode(const LevelState& st, std::uint64_t phase) const {
    std::uint64_t key = phased_ ? phase : 0;
    for (std::size_t d = 0; d < depth_; ++d) key = (key << bits_) | st.levels[d];
    return key;
  }

  LevelState decode(std::uint64_t key, std::uint64_t& phase) const {
    LevelState st;
    st.depth = static_cast<std::uint8_t>(depth_);
    for (std::size_t d = depth_; d-- > 0;) {
      st.levels[d] = key & mask_;
      key = bits_ == 64 ? 0 : key >> bits_;
    }
    phase = phased_ ? key : 0;
    return st;
  }

 private:
  unsigned bits_;
  std::size_t depth_;
  bool phased_;
  std::uint64_t mask_;
};

std::vector<const GeneratorSpec*> levels_of(const GeneratorSpec& spec) {
  std::vector<const GeneratorSpec*> out;
  for (const GeneratorSpec* s = &spec; s; s = s->nested()) out.push_back(s);
  return out;
}

std::vector<state_t> default_seeds(std::uint64_t n, const DiversityOptions& options,
                                   bool& upper_bound) {
  if (options.seeds) {
    upper_bound = !options.seeds_are_exhaustive;
    return *options.seeds;
  }
  if (n > options.guard) {
    throw GuardExceeded("exhaustive diversity over n = " + std::to_string(n) +
                        " seeds exceeds the guard " + std::to_string(options.guard) +
                        "; pass sampled seeds for an upper bound");
  }
  std::vector<state_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), state_t{0});
  return seeds;
}

// Explicit assist sequences are finite, so each seed's run is scanned
// directly over the indices the sequence covers.
DiversityCurve explicit_assist_diversity(const GeneratorSpec& spec,
                                         std::uint64_t kmax,
                                         const DiversityOptions& options,
                                         const std::vector<state_t>& seeds) {
  std::uint64_t length = std::numeric_limits<std::uint64_t>::max();
  for (const GeneratorSpec* s : levels_of(spec)) {
    if (const auto* sa = std::get_if<SequenceAssisted>(&s->node())) {
      if (const auto* v = std::get_if<std::vector<state_t>>(&sa->assist)) {
        length = std::min<std::uint64_t>(length, v->size());
      }
    }
  }
  const std::uint64_t first = options.include_seed_position ? 0 : 1;
  if (length <= first || length - first < kmax) {
    throw DomainError("explicit assist sequence covers fewer than kmax positions");
  }
  DiversityCurve curve;
  curve.kmax = kmax;
  curve.values.assign(kmax, std::numeric_limits<std::uint64_t>::max());
  for (state_t seed : seeds) {
    auto run = options.observe == Observe::kStates ? run_states(spec, seed, length)
                                                   : run_outputs(spec, seed, length);
    auto c = sequence_diversity(std::span(run).subspan(first), kmax);
    for (std::uint64_t k = 0; k < kmax; ++k) {
      curve.values[k] = std::min(curve.values[k], c.values[k]);
    }
  }
  return curve;
}

}  // namespace

DiversityCurve sequence_diversity(std::span<const state_t> seq, std::uint64_t kmax) {
  check_kmax(kmax);
  if (kmax > seq.size()) {
    throw DomainError("kmax " + std::to_string(kmax) + " exceeds sequence length " +
                      std::to_string(seq.size()));
  }
  std::vector<std::uint32_t> ids;
  const std::uint64_t m = compress(seq, ids);
  DiversityCurve curve;
  curve.kmax = kmax;
  curve.values = sliding_minima(ids, m, kmax);
  curve.subject = "sequence of length " + std::to_string(seq.size());
  return curve;
}

DiversityCurve tuple_sequence_diversity(std::span<const Tuple> seq,
                                        std::uint64_t kmax) {
  check_kmax(kmax);
  if (kmax > seq.size()) throw DomainError("kmax exceeds sequence length");
  std::map<Tuple, std::uint32_t> index;
  std::vector<std::uint32_t> ids(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ids[i] = index.try_emplace(seq[i], static_cast<std::uint32_t>(index.size()))
                 .first->second;
  }
  DiversityCurve curve;
  curve.kmax = kmax;
  curve.values = sliding_minima(ids, index.size(), kmax);
  curve.subject = "tuple sequence of length " + std::to_string(seq.size());
  return curve;
}

DiversityCurve generator_diversity(const GeneratorSpec& spec, std::uint64_t kmax,
                                   const DiversityOptions& options) {
  check_kmax(kmax);
  const std::uint64_t n = spec.space().size();
  bool upper_bound = false;
  const std::vector<state_t> seeds = default_seeds(n, options, upper_bound);
  for (state_t s : seeds) spec.space().check(s, "seed");

  DiversityCurve curve;
  if (spec.has_explicit_assist()) {
    curve = explicit_assist_diversity(spec, kmax, options, seeds);
  } else {
    const auto levels = levels_of(spec);
    const bool phased = spec.counter_dependent();
    const StateCodec codec(n, levels.size(), phased);

    std::vector<std::uint64_t> starts;
    const LevelState base = initial_state(spec, 0);
    if (options.sweep_inner_seeds && levels.size() > 1) {
      std::uint64_t combos = seeds.size();
      for (std::size_t d = 1; d < levels.size(); ++d) {
        if (combos > options.node_guard / levels[d]->space().size()) {
          throw GuardExceeded("inner seed sweep exceeds the node guard");
        }
        combos *= levels[d]->space().size();
      }
      LevelState st = base;
      for (state_t s : seeds) {
        st.levels[0] = s;
        for (std::size_t d = 1; d < levels.size(); ++d) st.levels[d] = 0;
        while (true) {
          starts.push_back(codec.encode(st, 0));
          std::size_t d = 1;
          for (; d < levels.size(); ++d) {
            if (++st.levels[d] < levels[d]->space().size()) break;
            st.levels[d] = 0;
          }
          if (d == levels.size()) break;
        }
      }
    } else {
      for (state_t s : seeds) starts.push_back(codec.encode(initial_state(spec, s), 0));
    }

    auto succ = [&](std::uint64_t key) {
      std::uint64_t phase;
      const LevelState st = codec.decode(key, phase);
      const std::uint64_t next_phase = phased ? (phase + 1) % n : 0;
      return codec.encode(step(spec, st, phased ? next_phase : 1), next_phase);
    };
    auto observe = [&](std::uint64_t key) -> std::uint64_t {
      std::uint64_t phase;
      const LevelState st = codec.decode(key, phase);
      return options.observe == Observe::kStates ? st.outer() : output_of(spec, st);
    };
    const detail::FunctionalGraph g =
        detail::explore(starts, options.include_seed_position, succ, observe,
                        options.node_guard);
    curve.values = detail::graph_curve(g, kmax, options.cap);
    std::uint64_t total = detail::graph_total(g);
    if (options.cap) total = std::min(total, *options.cap);
    curve.total = total;
  }
  curve.kmax = kmax;
  curve.subject = spec.kind_name() + " generator, n = " + std::to_string(n);
  curve.upper_bound = upper_bound;
  curve.cap = options.cap;
  return curve;
}

DiversityCurve tstep_diversity(const TStepSpec& spec, std::uint64_t kmax,
                               const DiversityOptions& options) {
  check_kmax(kmax);
  validate(spec);
  const std::uint64_t n = spec.f.size();
  bool upper_bound = false;
  const std::vector<state_t> seeds = default_seeds(n, options, upper_bound);

  const unsigned b = bits_for(n);
  if (static_cast<std::uint64_t>(b) * spec.t > 64) {
    throw GuardExceeded("tuples need more than 64 bits; exhaustive exploration "
                        "supports 64");
  }
  // Tuples are interned; a node is (tuple id, index mod n).
  detail::KeyIndex tuple_ids;
  std::vector<Tuple> tuples;
  auto intern = [&](const Tuple& tu) -> std::uint64_t {
    std::uint64_t packed = 0;
    for (state_t v : tu) packed = (packed << b) | v;
    auto [id, fresh] = tuple_ids.intern(packed);
    if (fresh) tuples.push_back(tu);
    return id;
  };
  std::vector<std::uint64_t> starts;
  for (state_t s : seeds) starts.push_back(intern(initial_tuple(spec, s)) * n);
  auto succ = [&](std::uint64_t key) {
    const std::uint64_t id = key / n;
    const std::uint64_t phase = key % n;
    const std::uint64_t next_phase = (phase + 1) % n;
    const Tuple next = t_step(spec, tuples[id], next_phase);
    return intern(next) * n + next_phase;
  };
  auto observe = [&](std::uint64_t key) { return key / n; };
  const detail::FunctionalGraph g =
      detail::explore(starts, true, succ, observe, options.node_guard);

  DiversityCurve curve;
  curve.kmax = kmax;
  curve.values = detail::graph_curve(g, kmax, options.cap);
  std::uint64_t total = detail::graph_total(g);
  if (options.cap) total = std::min(total, *options.cap);
  curve.total = total;
  curve.subject = std::to_string(spec.t) + "-step " +
                  (spec.dense ? "dense " : "") + "tuple sequence, n = " +
                  std::to_string(n);
  curve.upper_bound = upper_bound;
  curve.cap = options.cap;
  return curve;
}

CycleReport cycle_structure(const FunctionTable& f, std::uint64_t guard) {
  const std::uint64_t n = f.size();
  if (n > guard) {
    throw GuardExceeded("cycle decomposition of n = " + std::to_string(n) +
                        " states exceeds the guard " + std::to_string(guard));
  }
  const std::vector<state_t> next = f.tabulate(guard);
  constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();
  // For every state: distance to its cycle and that cycle's length.
  std::vector<std::uint64_t> tail(n, kUnset), period(n, kUnset);
  std::vector<std::uint64_t> on_walk(n, kUnset);  // position within current walk
  std::vector<state_t> path;
  CycleReport report;
  report.n = n;
  for (state_t s = 0; s < n; ++s) {
    if (tail[s] != kUnset) continue;
    path.clear();
    state_t u = s;
    while (tail[u] == kUnset && on_walk[u] == kUnset) {
      on_walk[u] = path.size();
      path.push_back(u);
      u = next[u];
    }
    std::size_t resolved = path.size();
    if (tail[u] == kUnset) {
      // New cycle starting at path[on_walk[u]].
      const std::size_t start = on_walk[u];
      const std::uint64_t len = path.size() - start;
      state_t rep = u;
      for (std::size_t i = start; i < path.size(); ++i) {
        tail[path[i]] = 0;
        period[path[i]] = len;
        rep = std::min(rep, path[i]);
      }
      report.cycles.push_back({len, rep});
      resolved = start;
    }
    for (std::size_t i = resolved; i-- > 0;) {
      const state_t w = path[i];
      const state_t nx = next[w];
      tail[w] = tail[nx] + 1;
      period[w] = period[nx];
    }
    for (state_t w : path) on_walk[w] = kUnset;
  }
  std::sort(report.cycles.begin(), report.cycles.end(),
            [](const CycleInfo& a, const CycleInfo& b) {
              return a.representative < b.representative;
            });
  report.seeds.resize(n);
  report.p_min = n;
  for (state_t s = 0; s < n; ++s) {
    report.seeds[s] = {s, tail[s], period[s]};
  }
  for (const CycleInfo& c : report.cycles) report.p_min = std::min(report.p_min, c.length);
  return report;
}

std::vector<IsolatedEqualityViolation> isolated_equality_check(
    std::span<const state_t> seq, std::uint64_t n, std::uint64_t guard) {
  if (seq.size() > guard) {
    throw GuardExceeded("isolated-equality scan of " + std::to_string(seq.size()) +
                        " positions exceeds the guard " + std::to_string(guard));
  }
  // Positions grouped by value; only equal pairs are compared.
  std::unordered_map<state_t, std::vector<std::uint64_t>> positions;
  for (std::uint64_t i = 0; i < seq.size(); ++i) positions[seq[i]].push_back(i);
  std::vector<IsolatedEqualityViolation> out;
  const std::uint64_t last = seq.size() - 1;
  for (const auto& [value, pos] : positions) {
    for (std::size_t a = 0; a < pos.size(); ++a) {
      for (std::size_t b = a + 1; b < pos.size(); ++b) {
        const std::uint64_t i = pos[a], j = pos[b];
        if (n != 0 && (j - i) % n == 0) continue;
        const bool succ = j < last && seq[i + 1] == seq[j + 1];
        const bool pred = i > 0 && seq[i - 1] == seq[j - 1];
        if (succ || pred) out.push_back({i, j, succ, pred});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  });
  return out;
}

std::uint64_t isqrt_floor(std::uint64_t v) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t isqrt_ceil(std::uint64_t v) {
  const std::uint64_t r = isqrt_floor(v);
  return r * r == v ? r : r + 1;
}

TheoremBounds theorem_bounds(std::uint64_t k, std::uint64_t n,
                             std::uint64_t image_size) {
  if (k == 0) throw DomainError("k must be at least 1");
  if (image_size == 0 || image_size > n) {
    throw DomainError("image size must lie in 1..n");
  }
  const std::uint64_t kk = std::min(k, n);
  TheoremBounds b;
  b.gamma = k <= n ? isqrt_ceil(k - 1) : isqrt_ceil(n);
  b.eta = (kk + image_size - 1) / image_size;
  return b;
}

std::optional<std::uint64_t> image_size(const FunctionTable& f,
                                        std::uint64_t guard) {
  if (auto cached = f.cached_image_size()) return cached;
  if (f.size() > guard) return std::nullopt;
  std::vector<bool> hit(f.size(), false);
  std::uint64_t count = 0;
  for (state_t x = 0; x < f.size(); ++x) {
    const state_t y = f(x);
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace cagen
