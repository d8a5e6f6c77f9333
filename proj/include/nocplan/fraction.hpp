// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nocplan {

/// Non-negative exact ratio, parsed from decimal text ("0.5", "1", "0.125").
///
/// Always kept in lowest terms so that equality is structural.
class Fraction {
   public:
    constexpr Fraction() = default;
    Fraction(std::uint64_t num, std::uint64_t den);

    /// Parses a plain decimal literal. Throws std::invalid_argument on
    /// anything else (signs, exponents, more than 18 fractional digits).
    static Fraction parse(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    /// floor(*this × value), exact.
    std::uint64_t scale_floor(std::uint64_t value) const;

    bool at_least_one() const { return num_ >= den_; }

    /// Shortest decimal rendering; exact because parse() only produces
    /// denominators that divide a power of ten.
    std::string to_string() const;

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

   private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace nocplan
