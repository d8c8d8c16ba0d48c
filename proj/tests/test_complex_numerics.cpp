#include <doctest.h>

#include <cmath>
#include <limits>

#include "modinv/complex_numerics.hpp"
#include "modinv/errors.hpp"
#include "modinv/rng.hpp"
#include "test_support.hpp"

using modinv::Complex;
using test_support::rel_diff;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Real AGM by direct iteration, the independent oracle for real arguments.
double real_agm(double a, double b) {
    while (a - b > 1e-17 * a) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}
} // namespace

TEST_CASE("principal_sqrt: fixed points and branch convention") {
    CHECK(modinv::principal_sqrt({4.0, 0.0}) == Complex{2.0, 0.0});
    CHECK(modinv::principal_sqrt({-1.0, 0.0}) == Complex{0.0, 1.0});
    // negative zero imaginary part must not flip onto the lower sheet
    CHECK(modinv::principal_sqrt({-4.0, -0.0}) == Complex{0.0, 2.0});

    const Complex w = modinv::principal_sqrt({0.0, 2.0});
    CHECK(rel_diff(w, {1.0, 1.0}) < 4 * kEps);
}

TEST_CASE("principal_sqrt: w^2 = z and half-plane choice on random inputs") {
    modinv::SplitMix64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const Complex z = test_support::random_box(rng, 10.0);
        const Complex w = modinv::principal_sqrt(z);
        CHECK(std::abs(w * w - z) <= 2 * kEps * std::abs(z) + 1e-300);
        CHECK(w.real() >= 0.0);
        if (w.real() == 0.0) CHECK(w.imag() >= 0.0);
    }
}

TEST_CASE("principal_sqrt: rejects non-finite input") {
    CHECK_THROWS_AS(modinv::principal_sqrt({std::nan(""), 0.0}), modinv::DomainError);
    CHECK_THROWS_AS(modinv::principal_sqrt({0.0, std::numeric_limits<double>::infinity()}),
                    modinv::DomainError);
}

TEST_CASE("cbrt_branch: fixed points") {
    CHECK(modinv::cbrt_branch({8.0, 0.0}, 0) == Complex{2.0, 0.0});

    const Complex principal = modinv::cbrt_branch({-1.0, 0.0}, 0);
    CHECK(std::abs(principal.real() - 0.5) < 4 * kEps);
    CHECK(std::abs(principal.imag() - std::sqrt(3.0) / 2.0) < 4 * kEps);

    const Complex real_branch = modinv::cbrt_branch({-1.0, 0.0}, 1);
    CHECK(std::abs(real_branch.real() + 1.0) < 4 * kEps);
    CHECK(std::abs(real_branch.imag()) < 4 * kEps);
}

TEST_CASE("cbrt_branch: w^3 = z on every branch") {
    modinv::SplitMix64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        const Complex z = test_support::random_box(rng, 10.0);
        for (int b = 0; b < 3; ++b) {
            const Complex w = modinv::cbrt_branch(z, b);
            CHECK(std::abs(w * w * w - z) <= 4 * kEps * std::abs(z) + 1e-300);
        }
    }
}

TEST_CASE("cbrt_branch: rejects out-of-range branch") {
    CHECK_THROWS_AS(modinv::cbrt_branch({1.0, 0.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(modinv::cbrt_branch({1.0, 0.0}, -1), std::invalid_argument);
}

TEST_CASE("agm: fixed point and degenerate limits") {
    CHECK(modinv::agm({1.0, 0.0}, {1.0, 0.0}) == Complex{1.0, 0.0});
    CHECK(modinv::agm({1.0, 0.0}, {0.0, 0.0}) == Complex{0.0, 0.0});
}

TEST_CASE("agm(1, 1/sqrt(2)) against the direct real iteration") {
    const double x = 1.0 / std::sqrt(2.0);
    const Complex m = modinv::agm({1.0, 0.0}, {x, 0.0});
    // 25-digit reference 0.8472130847939790866064991
    CHECK(std::abs(m.real() - 0.8472130847939790866064991) < 1e-10);
    CHECK(m.imag() == 0.0);
    CHECK(std::abs(m.real() - real_agm(1.0, x)) < 1e-14);
}

TEST_CASE("agm: symmetry and positive-real homogeneity") {
    modinv::SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Complex a = test_support::random_box(rng, 5.0);
        Complex b = test_support::random_box(rng, 5.0);
        if (a == Complex{} || b == Complex{}) continue;
        const Complex ab = modinv::agm(a, b);
        const Complex ba = modinv::agm(b, a);
        CHECK(rel_diff(ab, ba) <= 1e-14);

        const double t = std::exp(rng.uniform(-2.0, 2.0));
        const Complex scaled = modinv::agm(t * a, t * b);
        CHECK(rel_diff(scaled, t * ab) <= 1e-14);
    }
}

TEST_CASE("agm: real arguments in (0,1) stay real and bracketed") {
    modinv::SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(1e-6, 1.0 - 1e-6);
        const Complex m = modinv::agm({1.0, 0.0}, {x, 0.0});
        CHECK(m.imag() == 0.0);
        CHECK(m.real() > x);
        CHECK(m.real() < 1.0);
    }
}

TEST_CASE("agm: error paths") {
    CHECK_THROWS_AS(modinv::agm({1.0, 2.0}, {-1.0, -2.0}), modinv::DomainError);
    CHECK_THROWS_AS(modinv::agm({0.0, 0.0}, {0.0, 0.0}), modinv::DomainError);
    CHECK_THROWS_AS(modinv::agm({1.0, 0.0}, {2.0, 0.0}, {.max_iterations = 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(modinv::agm({1.0, 0.0}, {2.0, 0.0}, {.rel_tolerance = 1e-3}),
                    std::invalid_argument);
}

TEST_CASE("agm_g wraps agm(1, x)") {
    CHECK(modinv::agm_g({1.0, 0.0}) == Complex{1.0, 0.0});
    CHECK(modinv::agm_g({0.0, 0.0}) == Complex{0.0, 0.0});
    const double x = 1.0 / std::sqrt(2.0);
    CHECK(modinv::agm_g({x, 0.0}) == modinv::agm({1.0, 0.0}, {x, 0.0}));
}
