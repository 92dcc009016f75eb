// Copyright 2026 The pptmoments Authors
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

#ifndef PPTM_ERRORS_HPP
#define PPTM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pptm {

/// Input violates an operation's precondition (bad value, bad shape, bad spec).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// Requested tensor power or enumeration would exceed a fixed memory guard.
class SizeGuardExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Two computation paths that must agree did not, or a quantity that must be
/// real came out with a large imaginary part.
class NumericalConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

}  // namespace pptm

#endif  // PPTM_ERRORS_HPP
