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
// State spaces {0, ..., n-1} and the Latin-square combiners used to mix a
// counter or an assisting sequence into a generator's state.

#ifndef CAGEN_STATESPACE_H_
#define CAGEN_STATESPACE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cagen {

using state_t = std::uint64_t;

inline constexpr std::uint64_t kMaxSpaceSize = std::uint64_t{1} << 63;

constexpr bool is_power_of_two(std::uint64_t v) {
  return v != 0 && (v & (v - 1)) == 0;
}

enum class Arithmetic { kModular, kPowerOfTwo };

class StateSpace {
 public:
  // Throws DomainError if n == 0 or n > 2^63, and InvalidOperation if the
  // power-of-two hint is requested for a non power of two.
  explicit StateSpace(std::uint64_t n,
                      Arithmetic hint = Arithmetic::kModular);

  static StateSpace bits(unsigned w) {
    return StateSpace(std::uint64_t{1} << w, Arithmetic::kPowerOfTwo);
  }

  std::uint64_t size() const { return n_; }
  Arithmetic arithmetic() const { return hint_; }
  bool power_of_two() const { return is_power_of_two(n_); }
  // log2(n); only meaningful when power_of_two().
  unsigned width() const;

  bool contains(state_t x) const { return x < n_; }
  void check(state_t x, const char* what = "state") const;

  state_t add(state_t a, state_t b) const {
    state_t s = a + b;  // a, b < 2^63 so this cannot wrap
    return s >= n_ ? s - n_ : s;
  }
  state_t sub(state_t a, state_t b) const { return a >= b ? a - b : a + (n_ - b); }
  state_t neg(state_t a) const { return a == 0 ? 0 : n_ - a; }
  state_t reduce(std::uint64_t v) const { return v % n_; }

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  std::uint64_t n_;
  Arithmetic hint_;
};

// A permutation of {0, ..., n-1} stored as a lookup table, with its inverse
// when the table really is a bijection.
class PermutationTable {
 public:
  explicit PermutationTable(std::vector<state_t> table);
  static PermutationTable identity(std::uint64_t n);

  std::uint64_t size() const { return table_->size(); }
  state_t operator()(state_t x) const { return (*table_)[x]; }
  bool is_bijection() const { return inverse_ != nullptr; }
  // Throws DomainError when the table is not a bijection.
  state_t inverse(state_t y) const;
  std::span<const state_t> values() const { return *table_; }

 private:
  std::shared_ptr<const std::vector<state_t>> table_;
  std::shared_ptr<const std::vector<state_t>> inverse_;
};

// Latin-square operation: a binary operation on X that is uniquely
// invertible given its result and either argument.
class LatinOp {
 public:
  enum class Kind { kAddMod, kSubMod, kXor, kConjugated };

  static LatinOp add_mod() { return LatinOp(Kind::kAddMod); }
  static LatinOp sub_mod() { return LatinOp(Kind::kSubMod); }
  static LatinOp xor_op() { return LatinOp(Kind::kXor); }
  // post(pre_left(a) base pre_right(b)). No bijectivity check is made here;
  // use validate_latin() to certify a conjugated op.
  static LatinOp conjugated(LatinOp base, PermutationTable pre_left,
                            PermutationTable pre_right, PermutationTable post);

  Kind kind() const { return kind_; }
  std::string name() const;

  // Present only for kConjugated.
  const LatinOp& base() const;
  const PermutationTable& pre_left() const;
  const PermutationTable& pre_right() const;
  const PermutationTable& post() const;

  // Throws InvalidOperation if the op cannot act on `space` (xor on a non
  // power of two, conjugation tables of the wrong size).
  void check_compatible(const StateSpace& space) const;

  // Hot-path variant without operand checks.
  state_t apply_unchecked(const StateSpace& space, state_t a, state_t b) const;

 private:
  struct Conjugation;
  explicit LatinOp(Kind k) : kind_(k) {}

  Kind kind_;
  std::shared_ptr<const Conjugation> conj_;
};

state_t apply(const LatinOp& op, const StateSpace& space, state_t a, state_t b);

// The unique b with apply(op, a, b) == c.
state_t invert_right(const LatinOp& op, const StateSpace& space, state_t a,
                     state_t c);
// The unique a with apply(op, a, b) == c.
state_t invert_left(const LatinOp& op, const StateSpace& space, state_t b,
                    state_t c);

struct LatinViolation {
  enum class Axis { kRow, kColumn };
  Axis axis;
  state_t fixed;         // the fixed argument (row a or column b)
  state_t first_other;   // first free argument producing `value`
  state_t second_other;  // second free argument producing the same value
  state_t value;
};

struct LatinReport {
  bool valid = true;
  std::optional<LatinViolation> violation;
  std::string describe() const;
};

inline constexpr std::uint64_t kDefaultLatinGuard = std::uint64_t{1} << 12;

// Exhaustive O(n^2) check that every row and column of the operation table
// is a permutation. Throws GuardExceeded when n > guard.
LatinReport validate_latin(const LatinOp& op, const StateSpace& space,
                           std::uint64_t guard = kDefaultLatinGuard);

}  // namespace cagen

#endif  // CAGEN_STATESPACE_H_
