/*
   Copyright 2026 The sextic-strata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEXTIC_ERROR_HPP
#define SEXTIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sextic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
};

/// Operand of the wrong shape or degree (wrong twist shape, mixed degrees, non-square input).
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// A list of human-readable contract violations; empty means ok.
using Violations = std::vector<std::string>;

}  // namespace sextic

#endif
