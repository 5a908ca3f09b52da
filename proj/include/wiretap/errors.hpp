// Copyright 2026 The wiretap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIRETAP_ERRORS_HPP_
#define WIRETAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wiretap {

// Malformed arguments: wrong dimensions, out-of-range counts.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that is well-formed but numerically singular (zero vectors,
// rank-deficient direction sets).
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivergentIntegral : public DomainError {
 public:
  using DomainError::DomainError;
};

// Request would exceed a hard size cap (e.g. exhaustive codebook search).
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wiretap

#endif  // WIRETAP_ERRORS_HPP_
