#include "modinv/special_values.hpp"

#include <cmath>

namespace modinv {

namespace {

double cube(double v) { return v * v * v; }

// ((4/3)y^2 - 1)^3 / (y^2 - 1) with y = 1 - 2a^2. The denominator is the
// cancellation-prone part for small a; 4a^2(a^2 - 1) is the same quantity
// exactly, without the subtraction of nearly-equal squares.
double quartic_family(double a) {
    const double a2 = a * a;
    const double y = 1.0 - 2.0 * a2;
    return cube((4.0 / 3.0) * y * y - 1.0) / (4.0 * a2 * (a2 - 1.0));
}

// (12b^2 - 1)^3 / (9b^2 - 1).
double duodecic_family(double b) {
    const double b2 = b * b;
    return cube(12.0 * b2 - 1.0) / (9.0 * b2 - 1.0);
}

// 33 + 24*sqrt(2) + sign*4*sqrt(140 + 99*sqrt(2)); the minus choice sits
// near 7.47e-3 after a single subtractive cancellation.
double radical_a(double sign) {
    const double r2 = std::sqrt(2.0);
    return 33.0 + 24.0 * r2 + sign * 4.0 * std::sqrt(140.0 + 99.0 * r2);
}

// 5 + 4*sqrt(2) + sign*2*sqrt(2*(7 + 5*sqrt(2))).
double radical_c(double sign) {
    const double r2 = std::sqrt(2.0);
    return 5.0 + 4.0 * r2 + sign * 2.0 * std::sqrt(2.0 * (7.0 + 5.0 * r2));
}

// 555 + outer*16*(20*sqrt(3) + inner*(8/sqrt(3) + outer*5)*sqrt(26 + outer*15*sqrt(3))).
double radical_b(double outer, double inner) {
    const double r3 = std::sqrt(3.0);
    const double root = std::sqrt(26.0 + outer * 15.0 * r3);
    return 555.0 + outer * 16.0 * (20.0 * r3 + inner * (8.0 / r3 + outer * 5.0) * root);
}

double cubed_wall_pair(double sign) {
    return cube(181.0 + sign * 19.0 * cube(3.0 / std::sqrt(2.0)));
}

double cubed_sqrt2_pair(double sign) {
    return cube(5.0 * (19.0 + sign * 13.0 * std::sqrt(2.0)) / 6.0);
}

double linear_sqrt3_pair(double sign) {
    return 375.0 * (35010.0 + sign * 20213.0 * std::sqrt(3.0)) / 16.0;
}

std::vector<SpecialValueEntry> build_table() {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);

    struct Row {
        const char* label;
        UpperHalfPoint tau;
        const char* descriptor;
        double (*recipe)();
    };
    const Row rows[] = {
        {"1/2+2i", {0.5, 2.0}, "1/2 + 2√-1", +[] { return quartic_family(radical_a(-1.0)); }},
        {"1/2+sqrt(3)i", {0.5, r3}, "1/2 + √-3", +[] { return duodecic_family(radical_b(+1.0, -1.0)); }},
        {"1/2+sqrt(2)i", {0.5, r2}, "1/2 + √-2", +[] { return quartic_family(radical_c(-1.0)); }},
        {"1/2+i", {0.5, 1.0}, "1/2 + √-1", +[] { return cubed_wall_pair(-1.0); }},
        {"(1+sqrt(3)i)/2", {0.5, r3 / 2.0}, "(1 + √-3)/2", +[] { return 0.0; }},
        {"(1+2sqrt(2)i)/3", {1.0 / 3.0, 2.0 * r2 / 3.0}, "(1 + 2√-2)/3",
         +[] { return cubed_sqrt2_pair(-1.0); }},
        {"(1+4sqrt(3)i)/7", {1.0 / 7.0, 4.0 * r3 / 7.0}, "(1 + 4√-3)/7",
         +[] { return duodecic_family(radical_b(-1.0, -1.0)); }},
        {"i", {0.0, 1.0}, "√-1", +[] { return 1.0; }},
        {"2i/sqrt(3)", {0.0, 2.0 / r3}, "2/√-3", +[] { return linear_sqrt3_pair(-1.0); }},
        {"sqrt(2)i", {0.0, r2}, "√-2", +[] { return cube(5.0 / 3.0); }},
        {"sqrt(3)i", {0.0, r3}, "√-3", +[] { return 125.0 / 4.0; }},
        {"2i", {0.0, 2.0}, "2√-1", +[] { return cube(11.0 / 2.0); }},
        {"4i/sqrt(3)", {0.0, 4.0 / r3}, "4/√-3", +[] { return duodecic_family(radical_b(-1.0, +1.0)); }},
        {"2sqrt(2)i", {0.0, 2.0 * r2}, "2√-2", +[] { return cubed_sqrt2_pair(+1.0); }},
        {"2sqrt(3)i", {0.0, 2.0 * r3}, "2√-3", +[] { return linear_sqrt3_pair(+1.0); }},
        {"4i", {0.0, 4.0}, "4√-1", +[] { return cubed_wall_pair(+1.0); }},
        {"4sqrt(2)i", {0.0, 4.0 * r2}, "4√-2", +[] { return quartic_family(radical_c(+1.0)); }},
        {"4sqrt(3)i", {0.0, 4.0 * r3}, "4√-3", +[] { return duodecic_family(radical_b(+1.0, +1.0)); }},
        {"8i", {0.0, 8.0}, "8√-1", +[] { return quartic_family(radical_a(+1.0)); }},
    };

    std::vector<SpecialValueEntry> entries;
    entries.reserve(std::size(rows));
    int index = 1;
    for (const Row& row : rows) {
        entries.push_back({row.label, row.tau, row.descriptor, row.recipe(), index, row.recipe});
        ++index;
    }
    return entries;
}

} // namespace

const std::vector<SpecialValueEntry>& table() {
    static const std::vector<SpecialValueEntry> entries = build_table();
    return entries;
}

double evaluate_entry(const SpecialValueEntry& entry) {
    return entry.recipe();
}

bool check_ascending(std::span<const SpecialValueEntry> entries) {
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (!(entries[i].value > entries[i - 1].value)) return false;
    }
    return true;
}

} // namespace modinv
