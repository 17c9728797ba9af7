#pragma once

#include <stdexcept>
#include <string>

namespace ec {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied parameters (non-prime modulus, degenerate b, ...).
struct invalid_parameter_error : error {
    using error::error;
};

// Curve with vanishing discriminant.
struct singular_curve_error : error {
    using error::error;
};

// Point handed to an operation that is not on the expected curve.
struct not_on_curve_error : error {
    using error::error;
};

// Birational map evaluated on its exceptional set (y = 0, x = -1, ...).
struct exceptional_point_error : error {
    using error::error;
};

// Supersingular curve handed to the volcano machinery.
struct unsupported_curve_error : error {
    using error::error;
};

// No isogenous curve with a complete Edwards form exists.
struct no_edwards_form_error : error {
    using error::error;
};

// Input outside the documented desk-scale bounds (point counting, sweeps).
struct resource_limit_error : error {
    using error::error;
};

// An identity the theory guarantees failed to hold; indicates an arithmetic bug.
struct consistency_error : error {
    using error::error;
};

} // namespace ec
