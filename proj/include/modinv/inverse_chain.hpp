#pragma once

#include <array>

#include "modinv/complex_numerics.hpp"
#include "modinv/types.hpp"

namespace modinv {

// Resolves the multivaluedness of the inversion chain: the sign taken for
// sqrt(x^2 - x^3) inside the Cardano radical and the cube-root branch.
// Six combinations in total; (+1, 0) is the default.
struct BranchChoice {
    int inner_sqrt_sign = +1;
    int cbrt_index = 0;

    friend bool operator==(const BranchChoice&, const BranchChoice&) = default;
};

// All six branch choices, default first.
const std::array<BranchChoice, 6>& all_branch_choices();

// A verified preimage of x under the modular invariant.
struct InversionResult {
    UpperHalfPoint tau;        // reduced to the fundamental domain
    BranchChoice branch_used;
    double residual;           // |j(tau) - x| / (1 + |x|)
};

// Cardano radical of the resolvent cubic: cbrt(s*sqrt(x^2 - x^3) - x) on the
// chosen cube-root branch, with s the inner sign. Defined as 0 at x = 0.
Complex cardano_radical(Complex x, BranchChoice branch = {});

// Maps a j-value to the squared-modulus ratio ((1 - lambda)^2 / lambda on the
// principal branch) by combining the Cardano radical with its conjugate slot:
// (3/2) * (x/w + w) - 1 with w the radical. The removable singularity at
// x = 0 takes its limit value -1.
Complex modulus_ratio(Complex x, BranchChoice branch = {});

// Elliptic modulus from the ratio: (sqrt(x + 4) - sqrt(x)) / 2, evaluated in
// whichever of the two conjugate forms avoids cancellation.
Complex modulus_from_ratio(Complex x);

// tau = i * agm(1, sqrt(1 - x^2)) / agm(1, x) for a modulus x.
// Throws CuspError for x in {0, +1, -1}.
Complex tau_from_modulus(Complex x, const AgmConfig& cfg = {});

// The composed chain on the default branch. The result is not guaranteed to
// lie in the upper half-plane for every complex x.
Complex invert_principal(Complex x, const AgmConfig& cfg = {});

// Enumerates the six branch choices (default first), keeps candidates in the
// upper half-plane, reduces them to the fundamental domain and accepts the
// first whose forward residual is within tol.
InversionResult invert_verified(Complex x, double tol, const AgmConfig& cfg = {});

} // namespace modinv
