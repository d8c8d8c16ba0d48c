#include <doctest.h>

#include <cmath>
#include <vector>

#include "modinv/forward_modular.hpp"
#include "modinv/special_values.hpp"
#include "test_support.hpp"

using modinv::SpecialValueEntry;
using test_support::defect;

namespace {

// 30-digit recomputation of every closed form (independent high-precision
// run), rounded to the nearest double here.
constexpr double kReference[19] = {
    -165.513888586345388735109204457,
    -30.3888801164139742704088994257,
    -3.76804238549194976590315444147,
    -0.0518489569845965511029579459666,
    0.0,
    0.13475826493933072129872550593,
    0.738494104493431845518913401177,
    1.0,
    1.33656117851404522797888613598,
    4.62962962962962962962962962963,
    31.25,
    166.375,
    1159.8503868645620740151741967,
    30237.133760253579187797219793,
    1641092.41343882148595477202111,
    47584673.801848956984596551103,
    1579838205123.1397050294726491,
    4653820044778057.29999914735847,
    3912712369665429647.84223341307,
};

} // namespace

TEST_CASE("table: shape and well-formedness") {
    const auto& entries = modinv::table();
    REQUIRE(entries.size() == 19);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].order_index == int(i) + 1);
        CHECK_FALSE(entries[i].label.empty());
        CHECK_FALSE(entries[i].tau_descriptor.empty());
        CHECK(entries[i].tau.im() > 0.0);
    }
}

TEST_CASE("table: anchor rows") {
    const auto& entries = modinv::table();
    CHECK(entries[7].tau.re() == 0.0);
    CHECK(entries[7].tau.im() == 1.0);
    CHECK(entries[7].value == 1.0);

    CHECK(entries[10].tau.im() == std::sqrt(3.0));
    CHECK(entries[10].value == 31.25);

    CHECK(entries[11].tau.im() == 2.0);
    CHECK(entries[11].value == 166.375);
}

TEST_CASE("table: arc rows sit exactly on the unit circle") {
    const auto& entries = modinv::table();
    for (int idx : {4, 5, 6}) {  // (1+sqrt(-3))/2, (1+2sqrt(-2))/3, (1+4sqrt(-3))/7
        const double norm = std::norm(entries[idx].tau.value());
        CHECK(std::abs(norm - 1.0) < 1e-15);
    }
}

TEST_CASE("closed forms agree with the high-precision recomputation") {
    const auto& entries = modinv::table();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const double v = modinv::evaluate_entry(entries[i]);
        CHECK(v == entries[i].value);
        CHECK(defect({v, 0.0}, {kReference[i], 0.0}) <= 1e-9);
    }
    // the near-cancelling small-constant family is still good to 1e-10
    CHECK(defect({entries[0].value, 0.0}, {kReference[0], 0.0}) <= 1e-10);
    CHECK(defect({entries[18].value, 0.0}, {kReference[18], 0.0}) <= 1e-10);
}

TEST_CASE("sign structure along the chain") {
    const auto& entries = modinv::table();
    for (int i = 0; i < 4; ++i) CHECK(entries[i].value < 0.0);
    CHECK(entries[4].value == 0.0);
    for (int i = 5; i < 19; ++i) CHECK(entries[i].value > 0.0);
}

TEST_CASE("check_ascending") {
    const auto& entries = modinv::table();
    CHECK(modinv::check_ascending(entries));

    std::vector<SpecialValueEntry> swapped(entries.begin(), entries.end());
    std::swap(swapped[7], swapped[8]);
    CHECK_FALSE(modinv::check_ascending(swapped));

    const std::vector<SpecialValueEntry> single(entries.begin(), entries.begin() + 1);
    CHECK(modinv::check_ascending(single));
}

TEST_CASE("forward evaluator agrees with every closed form") {
    for (const SpecialValueEntry& entry : modinv::table()) {
        const auto forward = modinv::j_invariant(entry.tau);
        CHECK(defect(forward, {entry.value, 0.0}) <= 1e-9);
        CHECK(std::abs(forward.imag()) <= 1e-9 * (1.0 + std::abs(forward.real())));
    }
}
