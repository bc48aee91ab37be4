#pragma once

#include <stdexcept>
#include <string>

namespace lik {

enum class Status : int {
    ok = 0,
    invalid_dimension = 1,
    invalid_argument = 2,
    numeric_error = 3,
    gap_not_found = 4,
    degenerate_spectrum = 5,
    no_signal = 6,
    degenerate_variance = 7,
    degenerate_weights = 8,
    insufficient_data = 9,
    invalid_weight = 10,
    undefined_beta = 11,
    io_error = 12,
    usage_error = 13,
};

/// Stable kebab-case name ("gap-not-found", ...); appears verbatim in messages.
const char* status_name(Status s);

class Error : public std::runtime_error {
public:
    Error(Status s, const std::string& msg)
        : std::runtime_error(std::string(status_name(s)) + ": " + msg), status_(s) {}
    Status status() const { return status_; }

private:
    Status status_;
};

/// Raised by estimate_k_dd when no spectral gap clears delta*d^2.
/// Carries the largest observed gap so the caller can retry with smaller delta.
class GapNotFound : public Error {
public:
    GapNotFound(double largest_gap, const std::string& msg)
        : Error(Status::gap_not_found, msg), largest_gap_(largest_gap) {}
    double largest_gap() const { return largest_gap_; }

private:
    double largest_gap_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

}  // namespace lik
