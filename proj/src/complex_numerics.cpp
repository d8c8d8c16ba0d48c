#include "modinv/complex_numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modinv {

namespace {

// Flush signed zeros so the branch cut of sqrt/cbrt is taken with
// Arg z in (-pi, pi]; without this, -x - 0i would land on the lower sheet.
Complex canonical(Complex z) {
    if (z.real() == 0.0) z.real(0.0);
    if (z.imag() == 0.0) z.imag(0.0);
    return z;
}

void require_finite(Complex z, const char* who) {
    if (!is_finite(z)) throw DomainError(std::string(who) + ": non-finite input");
}

void validate(const AgmConfig& cfg) {
    if (cfg.max_iterations < 8)
        throw std::invalid_argument("AgmConfig: max_iterations must be >= 8");
    if (!(cfg.rel_tolerance > 0.0 && cfg.rel_tolerance < 1e-6))
        throw std::invalid_argument("AgmConfig: rel_tolerance must be in (0, 1e-6)");
}

} // namespace

Complex principal_sqrt(Complex z) {
    require_finite(z, "principal_sqrt");
    Complex w = std::sqrt(canonical(z));
    if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
    return canonical(w);
}

Complex cbrt_branch(Complex z, int branch) {
    require_finite(z, "cbrt_branch");
    if (branch < 0 || branch > 2)
        throw std::invalid_argument("cbrt_branch: branch must be 0, 1 or 2");
    z = canonical(z);
    if (z == 0.0) return {};
    const double r = std::abs(z);
    const double t = std::arg(z);
    return std::polar(std::cbrt(r), (t + 2.0 * std::numbers::pi * branch) / 3.0);
}

Complex agm(Complex a, Complex b, const AgmConfig& cfg) {
    validate(cfg);
    require_finite(a, "agm");
    require_finite(b, "agm");
    if (a == 0.0 && b == 0.0) throw DomainError("agm: both arguments zero");
    if (a == 0.0 || b == 0.0) return {};

    for (int i = 0; i < cfg.max_iterations; ++i) {
        if (std::abs(a - b) <= cfg.rel_tolerance * std::abs(a))
            return 0.5 * (a + b);
        if (a == -b)
            throw DomainError("agm: a = -b, geometric-mean sign is undecidable");
        const Complex an = 0.5 * (a + b);
        Complex bn = principal_sqrt(a * b);
        const double d_minus = std::abs(an - bn);
        const double d_plus = std::abs(an + bn);
        if (d_minus > d_plus) {
            bn = -bn;
        } else if (d_minus == d_plus && (bn / an).imag() < 0.0) {
            bn = -bn;
        }
        a = an;
        b = bn;
    }
    throw ConvergenceError("agm: no convergence within max_iterations");
}

Complex agm_g(Complex x, const AgmConfig& cfg) {
    return agm(1.0, x, cfg);
}

} // namespace modinv
