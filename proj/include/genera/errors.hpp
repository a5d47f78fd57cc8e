#pragma once

#include <stdexcept>
#include <string>

namespace genera {

// Caller broke a contract: bad flag, mismatched orders, unknown name.
// Maps to CLI exit code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid input: non-invertible leading coefficient,
// composing with a unit constant term, a non-odd oriented e-series.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace genera
