#include "gyrostep/rational.hpp"

#include "gyrostep/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gyro {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_big(std::string_view s) {
    if (!all_digits(s)) throw parse_error("not a rational: invalid digits in '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw parse_error("not a rational: empty string");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw parse_error("not a rational: sign only");

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_big(s.substr(0, slash));
        BigInt den = parse_big(s.substr(slash + 1));
        if (den == 0) throw parse_error("not a rational: zero denominator in '" + std::string(text) + "'");
        result = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw parse_error("not a rational: '" + std::string(text) + "'");
        BigInt num = ip.empty() ? BigInt(0) : parse_big(ip);
        BigInt den = 1;
        if (!fp.empty()) {
            BigInt frac = parse_big(fp);
            for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
            num = num * den + frac;
        }
        result = Rational(num, den);
    } else {
        result = Rational(parse_big(s));
    }
    return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace gyro
