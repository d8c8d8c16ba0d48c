#pragma once

#include "modinv/types.hpp"

namespace modinv {

// Settings for the theta q-series. Inside the fundamental domain
// |q| <= exp(-pi*sqrt(3)/2), so fewer than ten terms reach the default
// tolerance; the cap only matters for Im tau close to 0.
struct ThetaConfig {
    double term_tolerance = 1e-18;
    int max_terms = 64;
};

struct ThetaNullwerte {
    Complex theta2;
    Complex theta3;
    Complex theta4;
};

// Nome q = exp(i*pi*tau); |q| < 1 on the upper half-plane.
Complex nome(UpperHalfPoint tau);

// Theta constants at argument zero:
//   theta2 = 2 * sum_{n>=0} q^((n+1/2)^2)
//   theta3 = 1 + 2 * sum_{n>=1} q^(n^2)
//   theta4 = 1 + 2 * sum_{n>=1} (-1)^n q^(n^2)
// Terms are produced as exp(i*pi*tau*e) directly from tau, never by powering
// q, so no accuracy is lost for large exponents.
ThetaNullwerte theta_nullwerte(UpperHalfPoint tau, const ThetaConfig& cfg = {});

// Modular lambda = (theta2/theta3)^4.
Complex lambda_from_theta(UpperHalfPoint tau, const ThetaConfig& cfg = {});

// Degree-6 rational map from lambda, normalized so that lambda = 1/2 maps
// to 1: 4*(lambda^2 - lambda + 1)^3 / (27 * lambda^2 * (1 - lambda)^2).
// This is Klein's j divided by 1728.
Complex j_from_lambda(Complex lambda);

// The modular invariant in the j(i) = 1 normalization, evaluated through the
// theta/lambda route.
Complex j_invariant(UpperHalfPoint tau, const ThetaConfig& cfg = {});

// Klein's classical normalization, 1728 * j_invariant.
Complex j_klein(UpperHalfPoint tau, const ThetaConfig& cfg = {});

} // namespace modinv
