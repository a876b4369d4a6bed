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

#include "cagen/statespace.h"

#include <bit>
#include <numeric>
#include <sstream>

#include "cagen/errors.h"

namespace cagen {

StateSpace::StateSpace(std::uint64_t n, Arithmetic hint) : n_(n), hint_(hint) {
  if (n == 0) throw DomainError("state space size must be at least 1");
  if (n > kMaxSpaceSize) throw DomainError("state space size exceeds 2^63");
  if (hint == Arithmetic::kPowerOfTwo && !is_power_of_two(n)) {
    throw InvalidOperation("power-of-two arithmetic requires n = 2^w, got n = " +
                           std::to_string(n));
  }
}

unsigned StateSpace::width() const {
  return static_cast<unsigned>(std::countr_zero(n_));
}

void StateSpace::check(state_t x, const char* what) const {
  if (x >= n_) {
    throw DomainError(std::string(what) + " " + std::to_string(x) +
                      " outside {0.." + std::to_string(n_ - 1) + "}");
  }
}

PermutationTable::PermutationTable(std::vector<state_t> table) {
  const std::uint64_t n = table.size();
  std::vector<state_t> inv(n, n);
  bool bijective = true;
  for (std::uint64_t x = 0; x < n; ++x) {
    const state_t y = table[x];
    if (y >= n) {
      throw DomainError("permutation entry " + std::to_string(y) +
                        " out of range at index " + std::to_string(x));
    }
    if (inv[y] != n) bijective = false;
    inv[y] = x;
  }
  table_ = std::make_shared<const std::vector<state_t>>(std::move(table));
  if (bijective) inverse_ = std::make_shared<const std::vector<state_t>>(std::move(inv));
}

PermutationTable PermutationTable::identity(std::uint64_t n) {
  std::vector<state_t> t(n);
  std::iota(t.begin(), t.end(), state_t{0});
  return PermutationTable(std::move(t));
}

state_t PermutationTable::inverse(state_t y) const {
  if (!inverse_) throw DomainError("table is not a permutation; no inverse");
  return (*inverse_)[y];
}

struct LatinOp::Conjugation {
  LatinOp base;
  PermutationTable pre_left, pre_right, post;
};

const LatinOp& LatinOp::base() const { return conj_->base; }
const PermutationTable& LatinOp::pre_left() const { return conj_->pre_left; }
const PermutationTable& LatinOp::pre_right() const { return conj_->pre_right; }
const PermutationTable& LatinOp::post() const { return conj_->post; }

LatinOp LatinOp::conjugated(LatinOp base, PermutationTable pre_left,
                            PermutationTable pre_right, PermutationTable post) {
  LatinOp op(Kind::kConjugated);
  op.conj_ = std::make_shared<const Conjugation>(
      Conjugation{std::move(base), std::move(pre_left), std::move(pre_right),
                  std::move(post)});
  return op;
}

std::string LatinOp::name() const {
  switch (kind_) {
    case Kind::kAddMod:
      return "add_mod";
    case Kind::kSubMod:
      return "sub_mod";
    case Kind::kXor:
      return "xor";
    case Kind::kConjugated:
      return "conjugated(" + conj_->base.name() + ")";
  }
  return "?";
}

void LatinOp::check_compatible(const StateSpace& space) const {
  switch (kind_) {
    case Kind::kAddMod:
    case Kind::kSubMod:
      return;
    case Kind::kXor:
      if (!space.power_of_two()) {
        throw InvalidOperation("xor requires n to be a power of two, got n = " +
                               std::to_string(space.size()));
      }
      return;
    case Kind::kConjugated: {
      const auto n = space.size();
      if (conj_->pre_left.size() != n || conj_->pre_right.size() != n ||
          conj_->post.size() != n) {
        throw InvalidOperation("conjugation tables must have exactly n = " +
                               std::to_string(n) + " entries");
      }
      conj_->base.check_compatible(space);
      return;
    }
  }
}

state_t LatinOp::apply_unchecked(const StateSpace& space, state_t a,
                                 state_t b) const {
  switch (kind_) {
    case Kind::kAddMod:
      return space.add(a, b);
    case Kind::kSubMod:
      return space.sub(a, b);
    case Kind::kXor:
      return a ^ b;
    case Kind::kConjugated:
      return conj_->post(conj_->base.apply_unchecked(space, conj_->pre_left(a),
                                                     conj_->pre_right(b)));
  }
  return 0;
}

state_t apply(const LatinOp& op, const StateSpace& space, state_t a, state_t b) {
  op.check_compatible(space);
  space.check(a, "left operand");
  space.check(b, "right operand");
  return op.apply_unchecked(space, a, b);
}

namespace {

state_t invert_right_unchecked(const LatinOp& op, const StateSpace& space,
                               state_t a, state_t c);

state_t invert_left_unchecked(const LatinOp& op, const StateSpace& space,
                              state_t b, state_t c) {
  switch (op.kind()) {
    case LatinOp::Kind::kAddMod:
      return space.sub(c, b);
    case LatinOp::Kind::kSubMod:
      return space.add(c, b);
    case LatinOp::Kind::kXor:
      return c ^ b;
    case LatinOp::Kind::kConjugated: {
      const state_t inner = op.post().inverse(c);
      const state_t pa =
          invert_left_unchecked(op.base(), space, op.pre_right()(b), inner);
      return op.pre_left().inverse(pa);
    }
  }
  return 0;
}

state_t invert_right_unchecked(const LatinOp& op, const StateSpace& space,
                               state_t a, state_t c) {
  switch (op.kind()) {
    case LatinOp::Kind::kAddMod:
      return space.sub(c, a);
    case LatinOp::Kind::kSubMod:
      return space.sub(a, c);
    case LatinOp::Kind::kXor:
      return c ^ a;
    case LatinOp::Kind::kConjugated: {
      const state_t inner = op.post().inverse(c);
      const state_t qb =
          invert_right_unchecked(op.base(), space, op.pre_left()(a), inner);
      return op.pre_right().inverse(qb);
    }
  }
  return 0;
}

}  // namespace

state_t invert_right(const LatinOp& op, const StateSpace& space, state_t a,
                     state_t c) {
  op.check_compatible(space);
  space.check(a, "left operand");
  space.check(c, "result");
  return invert_right_unchecked(op, space, a, c);
}

state_t invert_left(const LatinOp& op, const StateSpace& space, state_t b,
                    state_t c) {
  op.check_compatible(space);
  space.check(b, "right operand");
  space.check(c, "result");
  return invert_left_unchecked(op, space, b, c);
}

std::string LatinReport::describe() const {
  if (valid) return "valid Latin square";
  const auto& v = *violation;
  std::ostringstream os;
  if (v.axis == LatinViolation::Axis::kRow) {
    os << "row a=" << v.fixed << " repeats value " << v.value << " at b="
       << v.first_other << " and b=" << v.second_other;
  } else {
    os << "column b=" << v.fixed << " repeats value " << v.value << " at a="
       << v.first_other << " and a=" << v.second_other;
  }
  return os.str();
}

LatinReport validate_latin(const LatinOp& op, const StateSpace& space,
                           std::uint64_t guard) {
  const std::uint64_t n = space.size();
  if (n > guard) {
    throw GuardExceeded("validate_latin sweeps n^2 entries; n = " +
                        std::to_string(n) + " exceeds the guard " +
                        std::to_string(guard));
  }
  op.check_compatible(space);
  constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> seen(n);
  LatinReport report;
  for (int axis = 0; axis < 2; ++axis) {
    for (state_t fixed = 0; fixed < n; ++fixed) {
      std::fill(seen.begin(), seen.end(), kUnseen);
      for (state_t other = 0; other < n; ++other) {
        const state_t v = axis == 0 ? op.apply_unchecked(space, fixed, other)
                                    : op.apply_unchecked(space, other, fixed);
        if (v >= n) {
          report.valid = false;
          report.violation = LatinViolation{
              axis == 0 ? LatinViolation::Axis::kRow
                        : LatinViolation::Axis::kColumn,
              fixed, other, other, v};
          return report;
        }
        if (seen[v] != kUnseen) {
          report.valid = false;
          report.violation = LatinViolation{
              axis == 0 ? LatinViolation::Axis::kRow
                        : LatinViolation::Axis::kColumn,
              fixed, seen[v], other, v};
          return report;
        }
        seen[v] = other;
      }
    }
  }
  return report;
}

}  // namespace cagen
