#include "lik/errors.hpp"

namespace lik {

const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::invalid_dimension: return "invalid-dimension";
        case Status::invalid_argument: return "invalid-argument";
        case Status::numeric_error: return "numeric-error";
        case Status::gap_not_found: return "gap-not-found";
        case Status::degenerate_spectrum: return "degenerate-spectrum";
        case Status::no_signal: return "no-signal";
        case Status::degenerate_variance: return "degenerate-variance";
        case Status::degenerate_weights: return "degenerate-weights";
        case Status::insufficient_data: return "insufficient-data";
        case Status::invalid_weight: return "invalid-weight";
        case Status::undefined_beta: return "undefined-beta";
        case Status::io_error: return "io-error";
        case Status::usage_error: return "usage-error";
    }
    return "unknown";
}

}  // namespace lik
