#pragma once

#include <stdexcept>
#include <string>

namespace genbound {

// Thrown when a computation would exceed an explicit resource budget
// (element counts, subgroup order caps, integer size caps, sieve memory).
// Budgets are hard limits: we refuse to answer rather than truncate.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed external input (cycle notation, group files, data tables).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace genbound
