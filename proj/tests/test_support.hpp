// Small helpers shared by the renderer tests and the acceptance runner:
// a minimal XML well-formedness walk and a parser that recovers the word
// from an ASCII diagram.
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

// Walks tags and checks proper nesting. Understands the XML declaration,
// self-closing tags, and quoted attribute values; no entities or comments,
// which the renderer never emits.
inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        size_t j = i + 1;
        if (j < n && text[j] == '?') {
            const size_t end = text.find("?>", j);
            if (end == std::string::npos) return false;
            i = end + 2;
            continue;
        }
        const bool closing = (j < n && text[j] == '/');
        if (closing) ++j;
        std::string name;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':')) {
            name += text[j++];
        }
        if (name.empty()) return false;
        bool self_closing = false;
        while (j < n && text[j] != '>') {
            if (text[j] == '"') {
                j = text.find('"', j + 1);
                if (j == std::string::npos) return false;
            } else if (text[j] == '/' && j + 1 < n && text[j + 1] == '>') {
                self_closing = true;
            } else if (text[j] == '<') {
                return false;
            }
            ++j;
        }
        if (j >= n) return false;
        if (closing) {
            if (self_closing || stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
        i = j + 1;
    }
    return stack.empty();
}

inline size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

// Recovers the word from an ASCII diagram: digit runs read left to right
// by column. Tokens never share columns, so column order is word order.
inline std::vector<int> ascii_values(const std::string& art) {
    std::vector<std::pair<size_t, int>> found; // (column, value)
    size_t col = 0;
    size_t i = 0;
    while (i < art.size()) {
        const char ch = art[i];
        if (ch == '\n') {
            col = 0;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const size_t start = col;
            int value = 0;
            while (i < art.size() && std::isdigit(static_cast<unsigned char>(art[i]))) {
                value = value * 10 + (art[i] - '0');
                ++i;
                ++col;
            }
            found.emplace_back(start, value);
            continue;
        }
        ++i;
        ++col;
    }
    std::sort(found.begin(), found.end());
    std::vector<int> values;
    values.reserve(found.size());
    for (const auto& [c, v] : found) values.push_back(v);
    return values;
}

} // namespace testsupport
