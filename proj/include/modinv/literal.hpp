#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "modinv/types.hpp"

namespace modinv {

// Parses a complex literal:  complex := real | [real] [sign] imag "i" | "i"
// with real/imag in decimal or scientific notation, no whitespace anywhere,
// and a bare "i" meaning "1i". Returns nullopt for anything else (including
// non-finite values).
std::optional<Complex> parse_complex(std::string_view text);

// Formats a double with the given number of significant digits, locale
// independent. digits = 17 round-trips through parse exactly.
std::string format_real(double value, int digits);

// Formats as "re+imi" / "re-imi".
std::string format_complex(Complex z, int digits);

} // namespace modinv
