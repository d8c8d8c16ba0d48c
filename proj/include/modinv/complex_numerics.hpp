#pragma once

#include "modinv/types.hpp"

namespace modinv {

// Settings for the arithmetic-geometric mean iteration.
struct AgmConfig {
    int max_iterations = 64;
    double rel_tolerance = 1e-15;
};

// Principal square root: Re w >= 0, and Im w >= 0 on the branch cut
// (Re w = 0). Negative-zero components of z are flushed to +0 first, so
// sqrt(-1 - 0i) = +i and the cut behaves as Arg z in (-pi, pi].
Complex principal_sqrt(Complex z);

// Cube root on branch 0, 1 or 2: |z|^(1/3) * exp(i*(Arg z + 2*pi*branch)/3)
// with Arg z in (-pi, pi]. Branch 0 is the principal cube root.
Complex cbrt_branch(Complex z, int branch);

// Complex arithmetic-geometric mean with the optimal square-root choice:
// each step picks the sign of the geometric mean so that |a'-b'| <= |a'+b'|,
// ties broken towards Im(b'/a') > 0. Degenerate inputs (a or b zero) yield 0.
Complex agm(Complex a, Complex b, const AgmConfig& cfg = {});

// agm(1, x).
Complex agm_g(Complex x, const AgmConfig& cfg = {});

} // namespace modinv
