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

#ifndef CAGEN_ERRORS_H_
#define CAGEN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cagen {

// Operand or table value outside the state space, or mismatched sizes.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation that is not defined for the given space (e.g. xor on n = 6).
class InvalidOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive computation refused because its input exceeds a size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sequence-assisted generator ran past the end of its explicit assist
// sequence.
class ExhaustedAssist : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An adversarial construction whose parameters violate one of its
// constraints. The message names the constraint.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed configuration or file contents.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cagen

#endif  // CAGEN_ERRORS_H_
