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

#include "cagen/adversarial.h"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

#include "cagen/analysis.h"
#include "cagen/errors.h"
#include "cagen/rng.h"

namespace cagen {

namespace {

constexpr std::array<std::pair<MeshedVariant, std::string_view>, 5> kVariantNames{{
    {MeshedVariant::kSquareAddMod, "square_add_mod"},
    {MeshedVariant::kPowerOfTwoAddMod, "power_of_two_add_mod"},
    {MeshedVariant::kGeneralFloorAddMod, "general_floor_add_mod"},
    {MeshedVariant::kPowerOfTwoXor, "power_of_two_xor"},
    {MeshedVariant::kCustomAddMod, "custom_add_mod"},
}};

bool is_power_of_four(std::uint64_t n) {
  return is_power_of_two(n) && (std::countr_zero(n) % 2 == 0);
}

[[noreturn]] void fail(const std::string& what) { throw ConstructionError(what); }

// Table of length n: the constrained entries on top of a zero or random fill.
std::vector<state_t> base_table(std::uint64_t n, std::uint64_t range,
                                const std::optional<std::uint64_t>& fill_seed) {
  std::vector<state_t> table(n, 0);
  if (fill_seed) {
    Rng rng(*fill_seed);
    for (auto& v : table) v = rng.below(range);
  }
  return table;
}

void require_distinct(const std::vector<state_t>& a, const std::vector<state_t>& b) {
  std::vector<state_t> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    fail("a and b values must be pairwise distinct");
  }
}

// Add-mod meshing on {0..m-1}; f on the remaining entries of `table`
// (indices >= m or unconstrained) is left as filled.
void mesh_add_mod(std::uint64_t m, std::uint64_t alpha, std::uint64_t beta,
                  state_t x, state_t y, std::vector<state_t>& table,
                  std::vector<state_t>& a, std::vector<state_t>& b) {
  const StateSpace sp(m);
  const state_t xr = sp.reduce(x), yr = sp.reduce(y);
  const state_t two_beta = sp.reduce(2 * beta);
  a.clear();
  b.clear();
  for (std::uint64_t r = 0; r < alpha; ++r) {
    const state_t step = sp.reduce((2 * beta % m) * r % m);
    a.push_back(sp.add(sp.add(yr, sp.reduce(2)), step));
  }
  for (std::uint64_t j = 0; j + 1 < beta; ++j) b.push_back(sp.add(xr, sp.reduce(1 + 2 * j)));
  b.push_back(sp.sub(sp.add(xr, two_beta), sp.reduce(1)));
  require_distinct(a, b);
  for (std::uint64_t r = 0; r < alpha; ++r) {
    table[a[r]] = sp.sub(xr, sp.reduce((2 * beta % m) * r % m));
  }
  for (std::uint64_t j = 0; j + 1 < beta; ++j) table[b[j]] = sp.sub(yr, sp.reduce(2 * j));
  table[b[beta - 1]] = sp.add(yr, sp.reduce(2));
}

}  // namespace

std::string_view meshed_variant_name(MeshedVariant v) {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  return "?";
}

MeshedVariant meshed_variant_from_name(std::string_view name) {
  for (const auto& [variant, n] : kVariantNames) {
    if (n == name) return variant;
  }
  throw ConfigError("unknown meshed variant '" + std::string(name) + "'");
}

LatinOp MeshedConstruction::op() const {
  return variant == MeshedVariant::kPowerOfTwoXor ? LatinOp::xor_op()
                                                  : LatinOp::add_mod();
}

GeneratorSpec MeshedConstruction::generator() const {
  return GeneratorSpec::counter_assisted(f, op());
}

std::optional<std::uint64_t> MeshedConstruction::expected_period() const {
  if (variant == MeshedVariant::kGeneralFloorAddMod && modulus != n) return std::nullopt;
  return 2 * alpha * beta;
}

std::optional<std::uint64_t> MeshedConstruction::expected_total() const {
  if (variant == MeshedVariant::kGeneralFloorAddMod && modulus != n) return std::nullopt;
  return alpha + beta;
}

std::uint64_t MeshedConstruction::total_bound() const {
  return (alpha + beta) * ((n + modulus - 1) / modulus);
}

std::vector<state_t> MeshedConstruction::traversal() const {
  std::vector<state_t> out;
  out.reserve(2 * alpha * beta);
  for (std::uint64_t r = 0; r < alpha; ++r) {
    for (std::uint64_t j = 0; j < beta; ++j) {
      out.push_back(a_values[r]);
      out.push_back(b_values[j]);
    }
  }
  return out;
}

MeshedConstruction build_meshed(std::uint64_t n, MeshedVariant variant,
                                const MeshedOptions& options) {
  if (variant == MeshedVariant::kPowerOfTwoXor) {
    if (options.random_fill_seed) fail("random fill is not offered for the xor variant");
    return build_meshed_xor(n, options.x, options.y);
  }
  if (n < 2 || n % 2 != 0) fail("n must be even");
  if (n > kDefaultSweepGuard) fail("n exceeds the table size limit");
  if (options.x % 2 != options.y % 2) fail("x and y must have the same parity");
  if (options.x >= n || options.y >= n) fail("x and y must lie in {0..n-1}");

  MeshedConstruction c;
  c.n = n;
  c.x = options.x;
  c.y = options.y;
  c.variant = variant;
  switch (variant) {
    case MeshedVariant::kSquareAddMod: {
      const std::uint64_t r = isqrt_floor(n / 2);
      if (r * r != n / 2) fail("n/2 must be a perfect square");
      c.alpha = c.beta = r;
      break;
    }
    case MeshedVariant::kPowerOfTwoAddMod: {
      if (!is_power_of_four(n)) fail("n must be an even power of 2");
      c.alpha = isqrt_floor(n);
      c.beta = c.alpha / 2;
      break;
    }
    case MeshedVariant::kGeneralFloorAddMod: {
      c.alpha = c.beta = isqrt_floor(n / 2);
      break;
    }
    case MeshedVariant::kCustomAddMod: {
      if (options.alpha == 0 || options.beta == 0) fail("alpha and beta must be positive");
      if (2 * options.alpha * options.beta != n) fail("2 alpha beta must equal n");
      c.alpha = options.alpha;
      c.beta = options.beta;
      break;
    }
    case MeshedVariant::kPowerOfTwoXor:
      break;
  }
  c.modulus = 2 * c.alpha * c.beta;
  if (c.modulus > n) fail("2 alpha beta must not exceed n");
  // The general variant reduces x and y mod m; m is even, so parity holds.
  std::vector<state_t> small =
      base_table(c.modulus, c.modulus, options.random_fill_seed);
  mesh_add_mod(c.modulus, c.alpha, c.beta, c.x, c.y, small, c.a_values, c.b_values);
  std::vector<state_t> table(n);
  for (state_t v = 0; v < n; ++v) table[v] = small[v % c.modulus];
  c.f = FunctionTable::table(StateSpace(n), std::move(table));
  return c;
}

MeshedConstruction build_meshed_xor(std::uint64_t n, state_t x, state_t y) {
  if (n < 2 || n % 2 != 0) fail("n must be even");
  if (!is_power_of_four(n)) fail("n must be an even power of 2");
  if (n > kDefaultSweepGuard) fail("n exceeds the table size limit");
  if (x % 2 != y % 2) fail("x and y must have the same parity");
  if (x >= n || y >= n) fail("x and y must lie in {0..n-1}");
  MeshedConstruction c;
  c.n = n;
  c.x = x;
  c.y = y;
  c.variant = MeshedVariant::kPowerOfTwoXor;
  c.alpha = isqrt_floor(n);
  c.beta = c.alpha / 2;
  c.modulus = n;
  if (c.beta == 0) fail("n must be at least 4");
  const state_t y2 = y ^ 2;
  const state_t two_beta = 2 * c.beta;
  std::vector<state_t> table(n, 0);
  for (std::uint64_t r = 0; r < c.alpha; ++r) c.a_values.push_back(y2 ^ (two_beta * r));
  for (std::uint64_t j = 0; j < c.beta; ++j) c.b_values.push_back(x ^ (2 * j + 1));
  require_distinct(c.a_values, c.b_values);
  for (std::uint64_t r = 0; r < c.alpha; ++r) table[c.a_values[r]] = x ^ (two_beta * r);
  for (std::uint64_t j = 0; j + 1 < c.beta; ++j) table[c.b_values[j]] = y2 ^ (2 * j + 2);
  table[c.b_values[c.beta - 1]] = y2;
  c.f = FunctionTable::table(StateSpace(n), std::move(table));
  return c;
}

std::vector<state_t> eulerian_sequence(std::uint64_t nu) {
  if (nu == 0) throw DomainError("nu must be at least 1");
  // Hierholzer; each vertex hands out its edges to 0, 1, ..., nu-1 in order.
  std::vector<std::uint64_t> next_edge(nu, 0);
  std::vector<state_t> stack{0};
  std::vector<state_t> circuit;
  circuit.reserve(nu * nu + 1);
  while (!stack.empty()) {
    const state_t v = stack.back();
    if (next_edge[v] < nu) {
      stack.push_back(next_edge[v]++);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

std::vector<std::string> gallery_names() {
  std::vector<std::string> out;
  for (BadVariant v : {BadVariant::kIndex, BadVariant::kCounterModeFOfI,
                       BadVariant::kFOfIPlusI, BadVariant::kFOfXPlusI,
                       BadVariant::kKitchenSink}) {
    out.emplace_back(bad_variant_name(v));
  }
  return out;
}

GalleryEntry gallery(std::string_view name, std::uint64_t n, state_t constant) {
  const BadVariant v = bad_variant_from_name(name);
  const StateSpace space(n);
  space.check(constant, "constant");
  auto entry = [&](FunctionTable f, std::string worst, std::uint64_t plateau,
                   bool poor, std::string note) {
    return GalleryEntry{std::string(name), GeneratorSpec::bad_mode(v, std::move(f)),
                        std::move(worst), plateau, poor, std::move(note)};
  };
  switch (v) {
    case BadVariant::kIndex:
      return entry(FunctionTable::identity(space), "any", n, true,
                   "x_i = i: maximal diversity, poor cryptographic quality");
    case BadVariant::kCounterModeFOfI:
      return entry(FunctionTable::constant(space, constant), "constant", 1, false,
                   "x_i = f(i) with constant f: every state is the constant");
    case BadVariant::kFOfIPlusI:
      return entry(FunctionTable::negation(space), "negation", 1, false,
                   "x_i = f(i) + i with f(x) = -x: every state is 0");
    case BadVariant::kFOfXPlusI:
      return entry(FunctionTable::constant(space, constant), "constant", 1, false,
                   "x_i = f(x_{i-1} + i) with constant f: every state is the constant");
    case BadVariant::kKitchenSink:
      return entry(FunctionTable::negation(space), "negation", 2, false,
                   "x_i = f(x_{i-1} + i) + i with f(x) = -x: states alternate s, -s");
  }
  throw ConfigError("unknown gallery entry");
}

}  // namespace cagen
