#pragma once

#include <cmath>
#include <complex>

#include "modinv/errors.hpp"

namespace modinv {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// A point of the open upper half-plane. Construction enforces Im > 0 and
// finiteness, so functions taking an UpperHalfPoint need no further checks.
class UpperHalfPoint {
public:
    UpperHalfPoint(double re, double im) : re_(re), im_(im) {
        if (!std::isfinite(re) || !std::isfinite(im))
            throw DomainError("UpperHalfPoint: components must be finite");
        if (!(im > 0.0))
            throw DomainError("UpperHalfPoint: Im must be positive");
    }
    explicit UpperHalfPoint(Complex z) : UpperHalfPoint(z.real(), z.imag()) {}

    double re() const { return re_; }
    double im() const { return im_; }
    Complex value() const { return {re_, im_}; }

private:
    double re_;
    double im_;
};

} // namespace modinv
