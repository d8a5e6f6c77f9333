// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace nocplan::detail {

/// Maps field paths ("noc.rows", "cores[2].position") to the 1-based line
/// on which the element starts. Only meaningful for syntactically valid
/// JSON; the structure is walked without building values.
class JsonLocator {
   public:
    explicit JsonLocator(std::string_view text);

    /// Line of `path`, falling back to its closest recorded ancestor, or 0.
    std::size_t line_of(std::string path) const;

   private:
    void value(const std::string& path);
    void object(const std::string& path);
    void array(const std::string& path);
    std::string string_token();
    void skip_ws();

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::map<std::string, std::size_t> lines_;
};

/// 1-based line containing byte offset `pos`.
std::size_t line_at(std::string_view text, std::size_t pos);

}  // namespace nocplan::detail
