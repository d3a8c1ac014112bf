// Copyright 2026 The tugx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGX_ERRORS_HPP
#define TUGX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tugx {

// A game (or benchmark total) lies outside the domain a rule is defined on,
// e.g. proportional sharing on a game whose singleton worths do not sum to a
// positive number.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The constraint system built by an induction solver has no solution within
// tolerance; the benchmark does not satisfy the solver's precondition.
class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleSubject : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tugx

#endif  // TUGX_ERRORS_HPP
