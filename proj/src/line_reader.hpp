#pragma once

#include "ramsey/errors.hpp"
#include "ramsey/exact.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <string>

namespace ramsey::detail {

// Yields successive meaningful lines of a text input with their 1-based
// line numbers. '#' starts a comment anywhere in a line; blank (or
// comment-only) lines are skipped; surrounding whitespace is trimmed.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line, std::size_t& number) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++count_;
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw.erase(hash);
            auto begin = raw.find_first_not_of(" \t\r");
            if (begin == std::string::npos)
                continue;
            auto end = raw.find_last_not_of(" \t\r");
            line = raw.substr(begin, end - begin + 1);
            number = count_;
            return true;
        }
        return false;
    }

private:
    std::istream& in_;
    std::size_t count_ = 0;
};

inline bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
    });
}

inline Natural parse_natural(const std::string& token, const std::string& source,
                             std::size_t line) {
    if (!all_digits(token))
        throw FormatError(source, line, "not a nonnegative integer: '" + token + "'");
    return Natural(token);
}

inline unsigned parse_unsigned(const std::string& token, const std::string& source,
                               std::size_t line) {
    Natural value = parse_natural(token, source, line);
    if (value > std::numeric_limits<unsigned>::max())
        throw FormatError(source, line, "value out of range: '" + token + "'");
    return static_cast<unsigned>(value);
}

}  // namespace ramsey::detail
