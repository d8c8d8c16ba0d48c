#include <doctest.h>

#include <cmath>

#include "modinv/inverse_chain.hpp"
#include "modinv/moduli_reduction.hpp"
#include "modinv/rng.hpp"
#include "test_support.hpp"

using modinv::Complex;
using modinv::UnimodularMatrix;
using modinv::UpperHalfPoint;
using test_support::rel_diff;

TEST_CASE("reduce: already-reduced point is untouched") {
    const auto r = modinv::reduce({0.5, 2.0});
    CHECK(r.point.re() == 0.5);
    CHECK(r.point.im() == 2.0);
    CHECK(r.map == UnimodularMatrix{});
}

TEST_CASE("reduce: single translation") {
    const auto r = modinv::reduce({1.0, 1.0});
    CHECK(std::abs(r.point.re()) < 1e-15);
    CHECK(std::abs(r.point.im() - 1.0) < 1e-15);
    CHECK(r.map == UnimodularMatrix{1, -1, 0, 1});
}

TEST_CASE("reduce: single inversion") {
    const auto r = modinv::reduce({0.0, 0.5});
    CHECK(std::abs(r.point.re()) < 1e-15);
    CHECK(std::abs(r.point.im() - 2.0) < 1e-15);
    CHECK(r.map == UnimodularMatrix{0, -1, 1, 0});
}

TEST_CASE("reduce: boundary normalization") {
    // wall Re = -1/2 maps to +1/2
    const auto wall = modinv::reduce({-0.5, 2.0});
    CHECK(wall.point.re() == 0.5);
    CHECK(wall.point.im() == 2.0);

    // arc points take Re >= 0
    const double angle = 2.0;  // radians, left half of the unit circle
    const auto arc = modinv::reduce({std::cos(angle), std::sin(angle)});
    CHECK(arc.point.re() >= 0.0);
    CHECK(std::abs(std::abs(arc.point.value()) - 1.0) < 1e-12);
}

TEST_CASE("reduce: random points land in the closed fundamental domain") {
    modinv::SplitMix64 rng(8);
    for (int i = 0; i < 500; ++i) {
        const UpperHalfPoint tau{rng.uniform(-20.0, 20.0), rng.uniform(0.05, 5.0)};
        const auto r = modinv::reduce(tau);

        CHECK(std::abs(r.point.re()) <= 0.5 + 1e-12);
        CHECK(std::abs(r.point.value()) >= 1.0 - 1e-12);
        CHECK(r.map.det() == 1);

        // the matrix witnesses the reduction
        const Complex mapped = r.map.apply(tau.value());
        CHECK(std::abs(mapped - r.point.value()) <=
              1e-12 * (1.0 + std::abs(r.point.value())));

        // idempotence, same normalization path
        const auto again = modinv::reduce(r.point);
        CHECK(std::abs(again.point.re() - r.point.re()) <= 1e-14);
        CHECK(std::abs(again.point.im() - r.point.im()) <= 1e-14);
    }
}

TEST_CASE("reduce: j is invariant along the orbit") {
    modinv::SplitMix64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const UpperHalfPoint tau{rng.uniform(-3.0, 3.0), rng.uniform(0.1, 3.0)};
        const Complex before = modinv::j_invariant(tau);
        const Complex after = modinv::j_invariant(modinv::reduce(tau).point);
        CHECK(std::abs(after - before) <= 1e-9 * (1.0 + std::abs(before)));
    }
}

TEST_CASE("is_equivalent: identical, S-related and inequivalent points") {
    CHECK(modinv::is_equivalent({0.0, 1.0}, {0.0, 1.0}, 1e-9));
    CHECK(modinv::is_equivalent({0.0, 2.0}, {0.0, 0.5}, 1e-9));
    CHECK(modinv::is_equivalent({-0.5, 1.2}, {0.5, 1.2}, 1e-9));
    CHECK_FALSE(modinv::is_equivalent({0.0, 1.0}, {0.0, 2.0}, 1e-9));
    CHECK_FALSE(modinv::is_equivalent({0.25, 1.5}, {0.0, 1.5}, 1e-9));
}

TEST_CASE("is_equivalent: seam points near the corner agree through j") {
    // two nearby points straddling the arc identification
    const double eps = 1e-9;
    const Complex corner{-0.5, std::sqrt(3.0) / 2.0};
    const Complex left = corner * (1.0 + eps);
    const Complex right = -1.0 / left + 0.0;
    CHECK(modinv::is_equivalent(UpperHalfPoint(left), UpperHalfPoint(right), 1e-6));
}

TEST_CASE("upper half-plane type rejects bad points") {
    CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), modinv::DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(0.0, 0.0), modinv::DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(std::nan(""), 1.0), modinv::DomainError);
}
