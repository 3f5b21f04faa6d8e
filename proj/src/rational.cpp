#include "sperner/rational.hpp"

#include <cctype>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    const boost::multiprecision::mpz_int p(std::string(num.front() == '+' ? num.substr(1) : num));
    const boost::multiprecision::mpz_int q{std::string(den)};
    if (q == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string format_rational(const Rational& value) {
    // mpq_rational is always kept canonical, and prints "p" for integers.
    return value.str();
}

} // namespace sperner
