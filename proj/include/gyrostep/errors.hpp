#pragma once

#include <stdexcept>

namespace gyro {

// An element of the wrong carrier (or from a different instance) reached an
// operation.
struct carrier_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructed or computed value landed on or beyond the carrier boundary,
// where the closed forms are singular.
struct boundary_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed textual input: rationals, JSON payloads, schema violations.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract (unsorted cuts, eps <= 0,
// constant input where a non-constant one is required, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// densify: the dense set has no point inside some translated neighborhood at
// the configured resolution.
struct density_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// narrow cover construction: the dense set translated by V does not cover the
// carrier.
struct cover_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gyro
