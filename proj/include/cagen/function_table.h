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
// Black-box iteration functions f: X -> X and output functions g: X -> Y.

#ifndef CAGEN_FUNCTION_TABLE_H_
#define CAGEN_FUNCTION_TABLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cagen/statespace.h"

namespace cagen {

// Deterministic add-rotate-xor mixing function keyed by a byte string. A
// stand-in for a keyed block cipher; no pseudorandomness claim is made.
class KeyedMixer {
 public:
  KeyedMixer(std::string key, unsigned rounds);

  const std::string& key() const { return key_; }
  unsigned rounds() const { return rounds_; }

  // Raw 64-bit mix of x.
  std::uint64_t mix(std::uint64_t x) const;
  // mix(x) scaled into {0, ..., m-1}.
  std::uint64_t into(std::uint64_t x, std::uint64_t m) const;

  friend bool operator==(const KeyedMixer& a, const KeyedMixer& b) {
    return a.key_ == b.key_ && a.rounds_ == b.rounds_;
  }

 private:
  std::string key_;
  unsigned rounds_;
  std::vector<std::uint64_t> round_keys_;
};

inline constexpr std::uint64_t kDefaultSweepGuard = std::uint64_t{1} << 26;

class FunctionTable {
 public:
  enum class Backend { kExplicit, kConstant, kNegation, kAffine, kKeyedMixer };

  // Throws DomainError unless table has exactly n entries, all < n.
  static FunctionTable table(const StateSpace& space, std::vector<state_t> table);
  static FunctionTable constant(const StateSpace& space, state_t c);
  static FunctionTable negation(const StateSpace& space);
  // x -> a*x + b (mod n).
  static FunctionTable affine(const StateSpace& space, state_t a, state_t b);
  static FunctionTable identity(const StateSpace& space) {
    return affine(space, space.size() == 1 ? 0 : 1, 0);
  }
  static FunctionTable keyed_mixer(const StateSpace& space, KeyedMixer mixer);

  const StateSpace& space() const { return space_; }
  std::uint64_t size() const { return space_.size(); }
  Backend backend() const;

  state_t operator()(state_t x) const {
    switch (impl_.index()) {
      case 0:
        return (*std::get<0>(impl_).values)[x];
      case 1:
        return std::get<1>(impl_).c;
      case 2:
        return space_.neg(x);
      case 3: {
        const auto& af = std::get<3>(impl_);
        const unsigned __int128 p =
            static_cast<unsigned __int128>(af.a) * x + af.b;
        return static_cast<state_t>(p % space_.size());
      }
      default:
        return std::get<4>(impl_).into(x, space_.size());
    }
  }

  // Explicit backend only (empty span otherwise).
  std::span<const state_t> explicit_values() const;
  state_t constant_value() const;
  std::pair<state_t, state_t> affine_coefficients() const;
  const KeyedMixer& mixer() const;

  // |Im(f)| when it is known without a sweep (closed-form backends, or
  // computed once at construction for explicit tables).
  std::optional<std::uint64_t> cached_image_size() const { return image_size_; }

  // Full lookup table; throws GuardExceeded when n > guard.
  std::vector<state_t> tabulate(std::uint64_t guard = kDefaultSweepGuard) const;

 private:
  struct Explicit {
    std::shared_ptr<const std::vector<state_t>> values;
  };
  struct Constant {
    state_t c;
  };
  struct Negation {};
  struct Affine {
    state_t a, b;
  };
  using Impl = std::variant<Explicit, Constant, Negation, Affine, KeyedMixer>;

  FunctionTable(StateSpace space, Impl impl, std::optional<std::uint64_t> im)
      : space_(space), impl_(std::move(impl)), image_size_(im) {}

  StateSpace space_;
  Impl impl_;
  std::optional<std::uint64_t> image_size_;
};

class OutputFunction {
 public:
  enum class Backend { kIdentity, kTruncate, kTable, kMapped, kKeyedMixer };

  static OutputFunction identity(const StateSpace& space);
  // Keeps the low `bits` bits; Y has size 2^bits.
  static OutputFunction truncate(const StateSpace& space, unsigned bits);
  // Throws DomainError unless table has n entries, all < output_size.
  static OutputFunction table(const StateSpace& space, std::vector<state_t> table,
                              std::uint64_t output_size);
  // Uses an iteration-style function as an output function (Y = X).
  static OutputFunction mapped(FunctionTable f);
  static OutputFunction keyed_mixer(const StateSpace& space, KeyedMixer mixer,
                                    std::uint64_t output_size);

  const StateSpace& space() const { return space_; }
  std::uint64_t output_size() const { return output_size_; }
  Backend backend() const { return backend_; }

  state_t operator()(state_t x) const {
    switch (backend_) {
      case Backend::kIdentity:
        return x;
      case Backend::kTruncate:
        return x & (output_size_ - 1);
      case Backend::kTable:
        return (*table_)[x];
      case Backend::kMapped:
        return (*mapped_)(x);
      case Backend::kKeyedMixer:
        return mixer_->into(x, output_size_);
    }
    return 0;
  }

  unsigned truncate_bits() const;
  std::span<const state_t> table_values() const;
  const FunctionTable& mapped_function() const { return *mapped_; }
  const KeyedMixer& mixer() const { return *mixer_; }

 private:
  OutputFunction(StateSpace space, Backend b, std::uint64_t m)
      : space_(space), backend_(b), output_size_(m) {}

  StateSpace space_;
  Backend backend_;
  std::uint64_t output_size_;
  std::shared_ptr<const std::vector<state_t>> table_;
  std::shared_ptr<const FunctionTable> mapped_;
  std::shared_ptr<const KeyedMixer> mixer_;
};

}  // namespace cagen

#endif  // CAGEN_FUNCTION_TABLE_H_
