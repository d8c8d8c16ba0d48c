#include "modinv/literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace modinv {

namespace {

// Reads a signed decimal/scientific number from the front of `text`.
// std::from_chars does not accept a leading '+', so the sign is peeled first.
// Returns the number of characters consumed (0 on failure).
std::size_t read_number(std::string_view text, double& out) {
    std::size_t pos = 0;
    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1.0;
        ++pos;
    }
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) return 0;
    double magnitude = 0.0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    const auto result = std::from_chars(first, last, magnitude);
    if (result.ec != std::errc{} || result.ptr == first) return 0;
    if (!std::isfinite(magnitude)) return 0;
    out = sign * magnitude;
    return pos + std::size_t(result.ptr - first);
}

} // namespace

std::optional<Complex> parse_complex(std::string_view text) {
    if (text.empty()) return std::nullopt;
    for (unsigned char ch : text) {
        if (std::isspace(ch)) return std::nullopt;
    }

    if (text.back() != 'i') {
        double re = 0.0;
        if (read_number(text, re) != text.size()) return std::nullopt;
        return Complex{re, 0.0};
    }

    std::string_view body = text.substr(0, text.size() - 1);
    // "i", "+i", "-i"
    if (body.empty()) return Complex{0.0, 1.0};
    if (body == "+") return Complex{0.0, 1.0};
    if (body == "-") return Complex{0.0, -1.0};

    double first = 0.0;
    const std::size_t consumed = read_number(body, first);
    if (consumed == 0) return std::nullopt;
    if (consumed == body.size()) return Complex{0.0, first};

    // real part followed by a signed imaginary part
    const double re = first;
    std::string_view rest = body.substr(consumed);
    if (rest[0] != '+' && rest[0] != '-') return std::nullopt;
    if (rest.size() == 1) return Complex{re, rest[0] == '-' ? -1.0 : 1.0};
    double im = 0.0;
    if (read_number(rest, im) != rest.size()) return std::nullopt;
    return Complex{re, im};
}

std::string format_real(double value, int digits) {
    if (digits < 1) digits = 1;
    if (digits > 17) digits = 17;
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                      std::chars_format::general, digits);
    return std::string(buffer, result.ptr);
}

std::string format_complex(Complex z, int digits) {
    std::string out = format_real(z.real(), digits);
    out += std::signbit(z.imag()) ? '-' : '+';
    out += format_real(std::abs(z.imag()), digits);
    out += 'i';
    return out;
}

} // namespace modinv
