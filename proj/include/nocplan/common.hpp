// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nocplan {

/// Clock cycles. Every duration and timestamp in the planner uses this unit.
using Cycles = std::uint64_t;
/// Abstract power units; all power arithmetic is exact integer arithmetic.
using Power = std::uint64_t;
using ModuleId = std::uint32_t;
using PortId = std::uint32_t;

/// Router coordinate on the grid: x is the column, y the row.
struct Position {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend auto operator<=>(const Position&, const Position&) = default;
};

inline std::uint32_t manhattan(Position a, Position b) {
    const auto dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    const auto dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx + dy;
}

std::string to_string(Position p);

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed document text. `line` is 1-based, 0 when unknown.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// A well-formed document (or in-memory instance) that breaks an invariant.
class ValidationError : public Error {
   public:
    ValidationError(std::string field, const std::string& what, std::size_t line = 0)
        : Error((line ? "line " + std::to_string(line) + ": " : std::string{}) + field + ": " + what),
          field_(std::move(field)),
          line_(line) {}
    const std::string& field() const { return field_; }
    std::size_t line() const { return line_; }

   private:
    std::string field_;
    std::size_t line_;
};

class CapacityError : public Error {
   public:
    using Error::Error;
};

class OutOfGridError : public Error {
   public:
    using Error::Error;
};

/// An endpoint used in a role it cannot play (e.g. an output port as source).
class RoleError : public Error {
   public:
    using Error::Error;
};

/// Some module can never be scheduled under the given options.
class InfeasibleError : public Error {
   public:
    InfeasibleError(ModuleId module, std::string reason)
        : Error("module " + std::to_string(module) + " cannot be scheduled: " + reason),
          module_(module),
          reason_(std::move(reason)) {}
    ModuleId module() const { return module_; }
    const std::string& reason() const { return reason_; }

   private:
    ModuleId module_;
    std::string reason_;
};

}  // namespace nocplan
