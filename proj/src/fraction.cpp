// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "nocplan/fraction.hpp"

#include <numeric>
#include <stdexcept>

namespace nocplan {

using u128 = unsigned __int128;

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("fraction denominator is zero");
    const auto g = std::gcd(num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
}

Fraction Fraction::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty fraction");
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool seen_dot = false;
    bool seen_digit = false;
    int frac_digits = 0;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad fraction '" + std::string(text) + "'");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw std::invalid_argument("bad fraction '" + std::string(text) + "'");
        seen_digit = true;
        if (seen_dot) {
            if (++frac_digits > 18) throw std::invalid_argument("fraction has too many digits");
            den *= 10;
        }
        const u128 next = u128(num) * 10 + static_cast<unsigned>(c - '0');
        if (next > UINT64_MAX) throw std::invalid_argument("fraction out of range");
        num = static_cast<std::uint64_t>(next);
    }
    if (!seen_digit) throw std::invalid_argument("bad fraction '" + std::string(text) + "'");
    return Fraction(num, den);
}

std::uint64_t Fraction::scale_floor(std::uint64_t value) const {
    const u128 r = u128(num_) * value / den_;
    if (r > UINT64_MAX) throw std::overflow_error("scaled fraction overflows");
    return static_cast<std::uint64_t>(r);
}

std::string Fraction::to_string() const {
    std::string out = std::to_string(num_ / den_);
    std::uint64_t rem = num_ % den_;
    if (rem == 0) return out;
    out += '.';
    for (int i = 0; rem != 0 && i < 19; ++i) {
        const u128 scaled = u128(rem) * 10;
        out += static_cast<char>('0' + static_cast<int>(scaled / den_));
        rem = static_cast<std::uint64_t>(scaled % den_);
    }
    return out;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    const auto g = std::gcd(a.den_, b.den_);
    const u128 den = u128(a.den_ / g) * b.den_;
    const u128 num = u128(a.num_) * (b.den_ / g) + u128(b.num_) * (a.den_ / g);
    if (den > UINT64_MAX || num > UINT64_MAX) throw std::overflow_error("fraction sum overflows");
    return Fraction(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return u128(a.num_) * b.den_ <=> u128(b.num_) * a.den_;
}

}  // namespace nocplan
