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

#include "cagen/function_table.h"

#include <bit>
#include <numeric>

#include "cagen/errors.h"

namespace cagen {
namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

}  // namespace

KeyedMixer::KeyedMixer(std::string key, unsigned rounds)
    : key_(std::move(key)), rounds_(rounds) {
  if (rounds_ == 0) throw DomainError("keyed mixer needs at least one round");
  // Absorb the key bytes into a splitmix state, then squeeze round keys.
  std::uint64_t s = 0x6a09e667f3bcc908ULL ^ key_.size();
  for (unsigned char ch : key_) {
    s ^= ch;
    (void)splitmix64(s);
    s = std::rotl(s, 8);
  }
  round_keys_.resize(2 * rounds_ + 1);
  for (auto& k : round_keys_) k = splitmix64(s);
}

std::uint64_t KeyedMixer::mix(std::uint64_t x) const {
  std::uint64_t a = x ^ round_keys_[0];
  std::uint64_t b = std::rotl(x, 32) + round_keys_[0];
  for (unsigned r = 0; r < rounds_; ++r) {
    a += b;
    b = std::rotl(b, 13) ^ a;
    a = std::rotl(a, 32) + round_keys_[2 * r + 1];
    b += a;
    a = std::rotl(a, 17) ^ b;
    b = std::rotl(b, 21) ^ round_keys_[2 * r + 2];
  }
  return a ^ b;
}

std::uint64_t KeyedMixer::into(std::uint64_t x, std::uint64_t m) const {
  const unsigned __int128 p = static_cast<unsigned __int128>(mix(x)) * m;
  return static_cast<std::uint64_t>(p >> 64);
}

FunctionTable FunctionTable::table(const StateSpace& space,
                                   std::vector<state_t> table) {
  const std::uint64_t n = space.size();
  if (table.size() != n) {
    throw DomainError("function table has " + std::to_string(table.size()) +
                      " entries, expected n = " + std::to_string(n));
  }
  std::vector<bool> hit(n);
  std::uint64_t image = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (table[x] >= n) {
      throw DomainError("function table entry " + std::to_string(table[x]) +
                        " at index " + std::to_string(x) + " is not below n = " +
                        std::to_string(n));
    }
    if (!hit[table[x]]) {
      hit[table[x]] = true;
      ++image;
    }
  }
  return FunctionTable(space,
                       Explicit{std::make_shared<const std::vector<state_t>>(
                           std::move(table))},
                       image);
}

FunctionTable FunctionTable::constant(const StateSpace& space, state_t c) {
  space.check(c, "constant");
  return FunctionTable(space, Constant{c}, 1);
}

FunctionTable FunctionTable::negation(const StateSpace& space) {
  return FunctionTable(space, Negation{}, space.size());
}

FunctionTable FunctionTable::affine(const StateSpace& space, state_t a,
                                    state_t b) {
  space.check(a, "affine multiplier");
  space.check(b, "affine offset");
  const std::uint64_t n = space.size();
  // x -> a*x has image a*Z_n, of size n / gcd(a, n).
  const std::uint64_t g = a == 0 ? n : gcd_u64(a, n);
  return FunctionTable(space, Affine{a, b}, n / g);
}

FunctionTable FunctionTable::keyed_mixer(const StateSpace& space,
                                         KeyedMixer mixer) {
  return FunctionTable(space, std::move(mixer), std::nullopt);
}

FunctionTable::Backend FunctionTable::backend() const {
  return static_cast<Backend>(impl_.index());
}

std::span<const state_t> FunctionTable::explicit_values() const {
  if (const auto* e = std::get_if<Explicit>(&impl_)) return *e->values;
  return {};
}

state_t FunctionTable::constant_value() const {
  return std::get<Constant>(impl_).c;
}

std::pair<state_t, state_t> FunctionTable::affine_coefficients() const {
  const auto& af = std::get<Affine>(impl_);
  return {af.a, af.b};
}

const KeyedMixer& FunctionTable::mixer() const {
  return std::get<KeyedMixer>(impl_);
}

std::vector<state_t> FunctionTable::tabulate(std::uint64_t guard) const {
  const std::uint64_t n = space_.size();
  if (n > guard) {
    throw GuardExceeded("tabulating f needs n = " + std::to_string(n) +
                        " entries, above the guard " + std::to_string(guard));
  }
  if (const auto* e = std::get_if<Explicit>(&impl_)) return *e->values;
  std::vector<state_t> out(n);
  for (std::uint64_t x = 0; x < n; ++x) out[x] = (*this)(x);
  return out;
}

OutputFunction OutputFunction::identity(const StateSpace& space) {
  return OutputFunction(space, Backend::kIdentity, space.size());
}

OutputFunction OutputFunction::truncate(const StateSpace& space,
                                        unsigned bits) {
  if (bits == 0 || bits > 63) {
    throw DomainError("truncate keeps between 1 and 63 bits");
  }
  return OutputFunction(space, Backend::kTruncate, std::uint64_t{1} << bits);
}

OutputFunction OutputFunction::table(const StateSpace& space,
                                     std::vector<state_t> table,
                                     std::uint64_t output_size) {
  if (output_size == 0) throw DomainError("output space must be non-empty");
  if (table.size() != space.size()) {
    throw DomainError("output table has " + std::to_string(table.size()) +
                      " entries, expected n = " + std::to_string(space.size()));
  }
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    if (table[x] >= output_size) {
      throw DomainError("output table entry " + std::to_string(table[x]) +
                        " at index " + std::to_string(x) +
                        " is not below the output size " +
                        std::to_string(output_size));
    }
  }
  OutputFunction g(space, Backend::kTable, output_size);
  g.table_ = std::make_shared<const std::vector<state_t>>(std::move(table));
  return g;
}

OutputFunction OutputFunction::mapped(FunctionTable f) {
  OutputFunction g(f.space(), Backend::kMapped, f.size());
  g.mapped_ = std::make_shared<const FunctionTable>(std::move(f));
  return g;
}

OutputFunction OutputFunction::keyed_mixer(const StateSpace& space,
                                           KeyedMixer mixer,
                                           std::uint64_t output_size) {
  if (output_size == 0) throw DomainError("output space must be non-empty");
  OutputFunction g(space, Backend::kKeyedMixer, output_size);
  g.mixer_ = std::make_shared<const KeyedMixer>(std::move(mixer));
  return g;
}

unsigned OutputFunction::truncate_bits() const {
  return static_cast<unsigned>(std::countr_zero(output_size_));
}

std::span<const state_t> OutputFunction::table_values() const {
  if (table_) return *table_;
  return {};
}

}  // namespace cagen
