#include "modinv/moduli_reduction.hpp"

#include <cmath>

namespace modinv {

namespace {

constexpr double kBoundaryWindow = 1e-12;
constexpr int kMaxSteps = 10000;

// Left-multiply by the translation [[1, n], [0, 1]].
void push_translation(UnimodularMatrix& m, long long n) {
    m.a += n * m.c;
    m.b += n * m.d;
}

// Left-multiply by the inversion [[0, -1], [1, 0]].
void push_inversion(UnimodularMatrix& m) {
    const UnimodularMatrix prev = m;
    m.a = -prev.c;
    m.b = -prev.d;
    m.c = prev.a;
    m.d = prev.b;
}

} // namespace

Complex UnimodularMatrix::apply(Complex tau) const {
    return (double(a) * tau + double(b)) / (double(c) * tau + double(d));
}

ReducedPoint reduce(UpperHalfPoint tau) {
    Complex t = tau.value();
    if (std::abs(t.real()) > 9e15)
        throw DomainError("reduce: |Re tau| too large for exact integer shifts");

    UnimodularMatrix m;
    int step = 0;
    for (; step < kMaxSteps; ++step) {
        const double shift = std::nearbyint(t.real());
        if (shift != 0.0) {
            t -= shift;
            push_translation(m, -static_cast<long long>(shift));
        }
        // Strict interior test; points within an ulp-scale shell of the unit
        // circle are treated as boundary and handled below.
        if (std::norm(t) < 1.0 - 1e-15) {
            t = -1.0 / t;
            push_inversion(m);
        } else {
            break;
        }
    }
    if (step == kMaxSteps)
        throw ConvergenceError("reduce: step limit exceeded");

    if (std::abs(std::abs(t) - 1.0) <= kBoundaryWindow && t.real() < 0.0) {
        t = -1.0 / t;
        push_inversion(m);
    }
    if (std::abs(t.real() + 0.5) <= kBoundaryWindow) {
        t += 1.0;
        push_translation(m, 1);
    }
    return {UpperHalfPoint(t), m};
}

bool is_equivalent(UpperHalfPoint t1, UpperHalfPoint t2, double tol,
                   const ThetaConfig& cfg) {
    if (!(tol > 0.0)) throw DomainError("is_equivalent: tol must be positive");
    const ReducedPoint r1 = reduce(t1);
    const ReducedPoint r2 = reduce(t2);
    if (std::abs(r1.point.re() - r2.point.re()) <= tol &&
        std::abs(r1.point.im() - r2.point.im()) <= tol)
        return true;
    const Complex j1 = j_invariant(r1.point, cfg);
    const Complex j2 = j_invariant(r2.point, cfg);
    return std::abs(j1 - j2) <= tol * (1.0 + std::abs(j1));
}

} // namespace modinv
