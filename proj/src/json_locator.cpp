// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#include "json_locator.hpp"

#include <algorithm>

namespace nocplan::detail {

std::size_t line_at(std::string_view text, std::size_t pos) {
    pos = std::min(pos, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

JsonLocator::JsonLocator(std::string_view text) : text_(text) {
    skip_ws();
    if (pos_ < text_.size()) value("");
}

std::size_t JsonLocator::line_of(std::string path) const {
    while (true) {
        if (auto it = lines_.find(path); it != lines_.end()) return it->second;
        if (path.empty()) return 0;
        const auto cut = path.find_last_of(".[");
        path = cut == std::string::npos ? std::string{} : path.substr(0, cut);
    }
}

void JsonLocator::skip_ws() {
    while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (c == '\n')
            ++line_;
        else if (c != ' ' && c != '\t' && c != '\r')
            break;
        ++pos_;
    }
}

std::string JsonLocator::string_token() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\') ++pos_;
        if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;  // closing quote
    return out;
}

void JsonLocator::value(const std::string& path) {
    skip_ws();
    if (pos_ >= text_.size()) return;
    lines_.emplace(path, line_);
    const char c = text_[pos_];
    if (c == '{') {
        object(path);
    } else if (c == '[') {
        array(path);
    } else if (c == '"') {
        string_token();
    } else {
        while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos)
            ++pos_;
    }
}

void JsonLocator::object(const std::string& path) {
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '}') {
        ++pos_;
        return;
    }
    while (pos_ < text_.size()) {
        skip_ws();
        const std::size_t key_line = line_;
        const std::string key = string_token();
        const std::string child = path.empty() ? key : path + "." + key;
        skip_ws();
        ++pos_;  // ':'
        value(child);
        lines_[child] = key_line;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            continue;
        }
        ++pos_;  // '}'
        return;
    }
}

void JsonLocator::array(const std::string& path) {
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return;
    }
    for (std::size_t i = 0; pos_ < text_.size(); ++i) {
        value(path + "[" + std::to_string(i) + "]");
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            continue;
        }
        ++pos_;  // ']'
        return;
    }
}

}  // namespace nocplan::detail
