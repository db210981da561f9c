// errors.hpp
// ----------
// Exception taxonomy for the satake library.
//
// Two roots: input_error for bad user-supplied data (CLI exit code 2),
// internal_error for violated invariants that indicate a bug in the
// library itself (CLI exit code 3). Identity-check failures are never
// exceptions; they travel in VerificationReport.

#pragma once

#include <stdexcept>
#include <string>

namespace satake {

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// -- symalg --------------------------------------------------------------

struct variable_mismatch_error : internal_error {
    using internal_error::internal_error;
};

struct order_mismatch_error : internal_error {
    using internal_error::internal_error;
};

// No exact quotient exists. Reaching this from the character code means
// the alternant construction is broken upstream.
struct not_divisible_error : internal_error {
    using internal_error::internal_error;
};

struct non_unit_constant_error : input_error {
    using input_error::input_error;
};

struct zero_to_negative_power_error : input_error {
    using input_error::input_error;
};

struct unassigned_variable_error : input_error {
    using input_error::input_error;
};

struct parse_error : input_error {
    using input_error::input_error;
};

// -- rootdata / characters ------------------------------------------------

struct unsupported_rank_error : input_error {
    using input_error::input_error;
};

struct not_dominant_error : input_error {
    using input_error::input_error;
};

struct unsupported_power_error : input_error {
    using input_error::input_error;
};

struct negative_degree_error : input_error {
    using input_error::input_error;
};

struct oracle_budget_error : input_error {
    using input_error::input_error;
};

// Parity gate: a public-facing result still carries an odd power of a
// half-power variable.
struct non_integral_result_error : internal_error {
    using internal_error::internal_error;
};

// -- zeta ------------------------------------------------------------------

// Residual q^(1/2) / q^(-s) / chi(pi) exponent left over after the
// exponent bookkeeping that must cancel identically.
struct residual_exponent_error : internal_error {
    using internal_error::internal_error;
};

// -- euler -----------------------------------------------------------------

struct divergence_guard_error : input_error {
    using input_error::input_error;
};

struct pole_proximity_error : input_error {
    using input_error::input_error;
};

struct term_cap_error : input_error {
    using input_error::input_error;
};

} // namespace satake
