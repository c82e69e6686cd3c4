// Copyright 2026 The mockq Authors
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

#ifndef MOCKQ_ERRORS_HPP
#define MOCKQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mockq
{

// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (|q| >= 1, Re(alpha) <= 0, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// A series, product or quadrature did not reach the requested tolerance
// within the configured work limit.
class NonConvergence : public Error
{
public:
    using Error::Error;
};

// A denominator factor vanished (or came within working precision of zero).
class PoleError : public Error
{
public:
    using Error::Error;
};

// Truncated series of different orders were combined.
class OrderMismatch : public Error
{
public:
    using Error::Error;
};

// Division by a series whose constant term is not +1 or -1.
class NonUnit : public Error
{
public:
    using Error::Error;
};

} // namespace mockq

#endif
