#include "amcc/rational.hpp"

#include "amcc/errors.hpp"

#include <cctype>

namespace amcc {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    Rational r{mpz_class{std::to_string(num)}, mpz_class{std::to_string(den)}};
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class parse_integer(std::string_view s) {
    std::string digits{s};
    if (!digits.empty() && digits[0] == '+') {
        digits.erase(0, 1);
    }
    return mpz_class{digits};
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("not a rational: '" + std::string{text} + "'");
    }
    const mpz_class d = parse_integer(den);
    if (d == 0) {
        throw ParseError("zero denominator: '" + std::string{text} + "'");
    }
    Rational r{parse_integer(num), d};
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

double to_double(const Rational& r) {
    return r.get_d();
}

} // namespace amcc
