#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Malformed input file (knowledge base or witness). Carries the source name
// and the 1-based offending line; line 0 means the defect is file-level
// (e.g. a missing record rather than a bad one).
class FormatError : public std::runtime_error {
public:
    FormatError(std::string source, std::size_t line, const std::string& what)
        : std::runtime_error(source + (line ? ":" + std::to_string(line) : "") + ": " + what),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

// A search ran out of its deterministic node budget. This is a resource
// outcome, never a mathematical claim: it must not be confused with
// "proven absent".
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t nodes)
        : std::runtime_error("node budget exceeded after " + std::to_string(nodes) + " nodes"),
          nodes_(nodes) {}

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

}  // namespace ramsey
