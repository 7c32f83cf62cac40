// Copyright 2026 The qsg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsg {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Asked for the leading term of the zero polynomial.
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("leading term of the zero polynomial") {}
};

/// A polynomial exceeded the degree cap of a rewrite system.
struct DegreeOverflow : Error {
    using Error::Error;
};

/// Completion derived a nonzero scalar from the relations: the ideal
/// contains the unit and the presented algebra is zero.
struct InconsistentPresentation : Error {
    using Error::Error;
};

/// Completion required a rule above the degree cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// A name that is not a declared generator.
struct UnknownLetter : Error {
    using Error::Error;
};

/// The same generator name declared twice.
struct DuplicateGenerator : Error {
    using Error::Error;
};

/// Two objects live over different finite-dimensional C*-algebras.
struct MismatchedSpace : Error {
    using Error::Error;
};

/// Representation matrices do not match the requested dimension layout.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A cached rule file was computed from a different presentation.
struct HashMismatch : Error {
    using Error::Error;
};

/// A cached rule file fails structural validation.
struct CorruptCache : Error {
    using Error::Error;
};

/// The candidate basis is not made of orthogonal idempotents summing to 1.
struct NotIdempotentBasis : Error {
    using Error::Error;
};

/// check_parametrized_solution was given a parametrization it does not know.
struct UnknownParametrization : Error {
    using Error::Error;
};

/// Source text rejected by the parser, with location.
struct ParseError : Error {
    size_t line;
    size_t col;
    ParseError(size_t line_, size_t col_, const std::string& msg)
        : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

}  // namespace qsg
