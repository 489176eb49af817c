// Copyright 2026 The ksub Authors
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

#ifndef KSUB_ERRORS_H_
#define KSUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ksub {

// Malformed or out-of-range input: bad dimensions, unknown instance kind,
// enumeration cap exceeded, mismatched vectors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller,
// e.g. asking for a marginal at an element that is already assigned.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A value oracle returned a negative value. Every guarantee in this library
// assumes a nonnegative codomain.
class RangeViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ksub

#endif  // KSUB_ERRORS_H_
