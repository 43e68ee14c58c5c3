// Copyright 2026 The isingforge Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isingforge {

/// Base of every error raised by the library. Callers that only need a
/// message can catch this; the CLI maps the concrete types to exit codes.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A topology was requested for too few qubits.
class InvalidSize : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class IndexError : public Error {
   public:
    using Error::Error;
};

/// Problem exceeds a brute-force or memory bound.
class TooLarge : public Error {
   public:
    using Error::Error;
};

class InvalidArgument : public Error {
   public:
    using Error::Error;
};

class EmptySampleSet : public Error {
   public:
    EmptySampleSet() : Error("sample set is empty") {}
};

/// Malformed document text. `line` is 1-based; 0 when not tied to a line.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, const std::string &message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    const std::string &message() const noexcept { return message_; }

   private:
    std::size_t line_;
    std::string message_;
};

/// Well-formed document whose content violates a model invariant.
class ValidationError : public Error {
   public:
    ValidationError(std::string field, const std::string &message)
        : Error(field + ": " + message), field_(std::move(field)), message_(message) {}

    const std::string &field() const noexcept { return field_; }
    const std::string &message() const noexcept { return message_; }

   private:
    std::string field_;
    std::string message_;
};

/// A platform-specific model cannot be lifted to the platform-independent one.
class NotRepresentable : public Error {
   public:
    using Error::Error;
};

class UnknownTopology : public Error {
   public:
    explicit UnknownTopology(std::vector<std::pair<std::size_t, std::size_t>> edges)
        : Error(describe(edges)), edges_(std::move(edges)) {}

    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const noexcept { return edges_; }

   private:
    static std::string describe(const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
        std::string out = "edge set matches no known topology: {";
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (k != 0) {
                out += ",";
            }
            out += std::to_string(edges[k].first) + "-" + std::to_string(edges[k].second);
        }
        return out + "}";
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

class MissingFieldTerm : public Error {
   public:
    explicit MissingFieldTerm(std::size_t qubit)
        : Error("qubit " + std::to_string(qubit) + " has no Z term"), qubit_(qubit) {}

    std::size_t qubit() const noexcept { return qubit_; }

   private:
    std::size_t qubit_;
};

}  // namespace isingforge
