#include "tpp/rational.hpp"

#include <cctype>
#include <charconv>

namespace tpp {

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_int = [&](const char* what) -> long long {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        long long v = 0;
        const auto res = std::from_chars(text.data() + start, text.data() + pos, v);
        if (pos == start || res.ec != std::errc())
            throw input_error("bad " + std::string(what) + " in rational \"" + text + "\"");
        return v;
    };
    const long long num = read_int("numerator");
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int("denominator");
        if (den == 0) throw input_error("zero denominator in rational \"" + text + "\"");
    }
    if (pos != text.size())
        throw input_error("trailing characters in rational \"" + text + "\"");
    return {negative ? -num : num, den};
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tpp
