#pragma once

#include <stdexcept>

namespace modinv {

// Input outside a function's domain (non-finite values, Im tau <= 0, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iteration hit its cap before reaching the requested tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested value degenerates at a cusp (tau -> i*inf, lambda in {0,1},
// modulus in {0, +1, -1}).
struct CuspError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// None of the six branch choices produced a verified preimage.
struct NoBranchFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace modinv
