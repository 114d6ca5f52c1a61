/*
 *   Copyright 2026 The heisrb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HEISRB_ERROR_HPP
#define HEISRB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heisrb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A substitution sent a denominator to zero.
class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(std::string denominator)
        : Error("denominator vanishes: " + denominator), denominator_(std::move(denominator)) {}

    const std::string &denominator() const noexcept { return denominator_; }

private:
    std::string denominator_;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Malformed structured input (JSON shape, element syntax, flag values).
class InputError : public Error {
public:
    using Error::Error;
};

class SideConditionViolated : public Error {
public:
    using Error::Error;
};

/// The characteristic polynomial of a 2x2 block does not split over Q(i).
class IrrationalEigenvalues : public Error {
public:
    using Error::Error;
};

class NotAnRbo : public Error {
public:
    using Error::Error;
};

/// Operator has r31 or r32 nonzero.
class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class SingularAutomorphism : public Error {
public:
    using Error::Error;
};

} // namespace heisrb

#endif
