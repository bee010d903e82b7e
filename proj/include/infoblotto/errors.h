// Copyright 2026 The infoblotto Authors
//
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

#ifndef INFOBLOTTO_ERRORS_H_
#define INFOBLOTTO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace infoblotto {

// All library errors derive from std::invalid_argument or std::logic_error so
// callers that only care about "bad input" can catch the std base.

// A PiecewiseCdf (or something claiming to be one) violates its invariants.
class InvalidDistributionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters are well-formed but outside the regime a closed form covers.
class OutOfRegimeError : public InvalidParameterError {
 public:
  using InvalidParameterError::InvalidParameterError;
};

class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A strategy or certificate file is malformed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested construction exists in principle but is not provided.
class UnsupportedCaseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace infoblotto

#endif  // INFOBLOTTO_ERRORS_H_
