/*
 * Copyright 2026 The crosstalk authors
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

#ifndef CROSSTALK_ERROR_HPP
#define CROSSTALK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xtalk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Source position inside a text input. Positions never take part in
/// structural equality of the syntax trees that carry them.
struct SourcePos {
    int line = 0;
    int column = 0;

    bool operator==(const SourcePos&) const { return true; }
};

/// Lexical or grammatical error, located in the input.
class ParseError : public Error {
public:
    ParseError(SourcePos pos, const std::string& message)
        : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
          pos_(pos), message_(message) {}

    int line() const { return pos_.line; }
    int column() const { return pos_.column; }
    const std::string& message() const { return message_; }

private:
    SourcePos pos_;
    std::string message_;
};

/// A well-formed input that violates a semantic rule: unknown names,
/// non-injective renamings, unknown variables in properties, ...
class ModelError : public Error {
public:
    using Error::Error;
};

/// State space exploration exceeded the configured cap.
class StateCapExceeded : public Error {
public:
    explicit StateCapExceeded(std::size_t cap)
        : Error("state space exceeds cap of " + std::to_string(cap) + " states"), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// Error raised while executing a command during exploration
/// (negative rate, variable written twice by one joint update).
class BuildError : public Error {
public:
    using Error::Error;
};

/// An iterative solver did not reach its tolerance within the cap.
class NonConvergence : public Error {
public:
    NonConvergence(std::size_t iterations, double residual)
        : Error("iterative solver did not converge after " + std::to_string(iterations) +
                " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}
    std::size_t iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

/// A shared label lacks the role annotation the classifier needs.
class AnnotationError : public Error {
public:
    using Error::Error;
};

} // namespace xtalk

#endif // CROSSTALK_ERROR_HPP
