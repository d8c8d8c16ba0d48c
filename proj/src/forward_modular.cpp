#include "modinv/forward_modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modinv {

namespace {

void validate(const ThetaConfig& cfg) {
    if (!(cfg.term_tolerance > 0.0 && cfg.term_tolerance < 1e-10))
        throw std::invalid_argument("ThetaConfig: term_tolerance must be in (0, 1e-10)");
    if (cfg.max_terms < 1)
        throw std::invalid_argument("ThetaConfig: max_terms must be positive");
}

} // namespace

Complex nome(UpperHalfPoint tau) {
    return std::exp(Complex{0.0, std::numbers::pi} * tau.value());
}

ThetaNullwerte theta_nullwerte(UpperHalfPoint tau, const ThetaConfig& cfg) {
    validate(cfg);
    const Complex ipt = Complex{0.0, std::numbers::pi} * tau.value();

    Complex theta2{};
    bool converged = false;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const double e = (n + 0.5) * (n + 0.5);
        const Complex term = std::exp(ipt * e);
        theta2 += term;
        if (std::abs(term) < cfg.term_tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("theta_nullwerte: theta2 series did not converge");
    theta2 *= 2.0;

    Complex theta3{1.0};
    Complex theta4{1.0};
    converged = false;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        const Complex term = std::exp(ipt * double(n) * double(n));
        theta3 += 2.0 * term;
        theta4 += (n % 2 != 0) ? -2.0 * term : 2.0 * term;
        if (std::abs(term) < cfg.term_tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("theta_nullwerte: theta3/theta4 series did not converge");

    return {theta2, theta3, theta4};
}

Complex lambda_from_theta(UpperHalfPoint tau, const ThetaConfig& cfg) {
    const ThetaNullwerte t = theta_nullwerte(tau, cfg);
    const Complex ratio = t.theta2 / t.theta3;
    const Complex r2 = ratio * ratio;
    return r2 * r2;
}

Complex j_from_lambda(Complex lambda) {
    if (!is_finite(lambda)) throw DomainError("j_from_lambda: non-finite input");
    if (lambda == 0.0 || lambda == 1.0)
        throw CuspError("j_from_lambda: lambda at a cusp");
    const Complex numerator_root = lambda * lambda - lambda + 1.0;
    const Complex one_minus = 1.0 - lambda;
    const Complex result = 4.0 * numerator_root * numerator_root * numerator_root /
                           (27.0 * lambda * lambda * one_minus * one_minus);
    if (!is_finite(result)) throw CuspError("j_from_lambda: value overflows near a cusp");
    return result;
}

Complex j_invariant(UpperHalfPoint tau, const ThetaConfig& cfg) {
    return j_from_lambda(lambda_from_theta(tau, cfg));
}

Complex j_klein(UpperHalfPoint tau, const ThetaConfig& cfg) {
    return 1728.0 * j_invariant(tau, cfg);
}

} // namespace modinv
