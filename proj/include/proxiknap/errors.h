// Copyright 2026 The Proxiknap Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROXIKNAP_ERRORS_H_
#define PROXIKNAP_ERRORS_H_

#include <stdexcept>

namespace proxiknap {

// Malformed or out-of-domain input (non-positive weights, overflow, parse
// failures).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text or JSON instance file that does not follow the documented format.
class ParseError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An oracle or solver would exceed its configured memory/time budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A routine was called outside the regime its caller must guarantee.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Fixing the forced copies of a clamped instance overshoots the target.
class InfeasibleReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver answer disagreed with the reference oracle.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace proxiknap

#endif  // PROXIKNAP_ERRORS_H_
