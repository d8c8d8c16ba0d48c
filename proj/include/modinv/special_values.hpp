#pragma once

#include <span>
#include <string>
#include <vector>

#include "modinv/types.hpp"

namespace modinv {

// One row of the ascending table of closed-form values of the modular
// invariant at CM points. The value is kept as a radical recipe so callers
// can re-evaluate it rather than trust a baked-in decimal.
struct SpecialValueEntry {
    std::string label;           // ASCII rendering of tau, e.g. "1/2+2i"
    UpperHalfPoint tau;          // numeric location in the upper half-plane
    std::string tau_descriptor;  // radical notation, e.g. "1/2 + 2√-1"
    double value;                // evaluated closed form
    int order_index;             // 1..19, position in the ascending chain
    double (*recipe)();          // closed-form evaluator
};

// All 19 rows in ascending order of value.
const std::vector<SpecialValueEntry>& table();

// Recomputes the entry's closed form from its radical constituents.
double evaluate_entry(const SpecialValueEntry& entry);

// True iff value strictly increases along the list.
bool check_ascending(std::span<const SpecialValueEntry> entries);

} // namespace modinv
