#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdr {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct context_mismatch : error {
    using error::error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct singular_matrix : error {
    using error::error;
};

struct degenerate_input : error {
    using error::error;
};

// All coordinate-change retries of the Macaulay quotient hit a vanishing minor.
struct resultant_indeterminate : error {
    using error::error;
};

// Smoothness via the resultant of the partials is unsound when the
// characteristic divides the degree (Euler's relation degenerates).
struct smoothness_undecidable : error {
    using error::error;
};

struct common_component : error {
    using error::error;
};

struct budget_exceeded : error {
    std::uint64_t required;
    budget_exceeded(std::uint64_t req, std::uint64_t budget)
        : error("enumeration needs " + std::to_string(req) +
                " candidates, exceeding budget " + std::to_string(budget)),
          required(req) {}
};

}  // namespace sdr
