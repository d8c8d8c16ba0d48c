#pragma once

#include "modinv/forward_modular.hpp"
#include "modinv/types.hpp"

namespace modinv {

// Integer matrix with determinant 1; witnesses a fundamental-domain
// reduction through its Moebius action (a*tau + b) / (c*tau + d).
struct UnimodularMatrix {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    Complex apply(Complex tau) const;

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
};

struct ReducedPoint {
    UpperHalfPoint point;
    UnimodularMatrix map;  // point == map.apply(input)
};

// Reduces tau to the standard fundamental domain |Re| <= 1/2, |tau| >= 1 by
// alternating unit translations and inversions tau -> -1/tau. Boundary
// representatives are normalized: points on the unit arc take Re >= 0 and
// the wall Re = -1/2 is mapped to +1/2 (both within a 1e-12 window).
ReducedPoint reduce(UpperHalfPoint tau);

// SL(2,Z)-equivalence test: reduced points compared componentwise within
// tol, falling back to comparing j values (which is authoritative across
// boundary identification seams).
bool is_equivalent(UpperHalfPoint t1, UpperHalfPoint t2, double tol,
                   const ThetaConfig& cfg = {});

} // namespace modinv
